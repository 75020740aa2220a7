// Copyright 2026 The spaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raster_ops.hpp"

#include <algorithm>
#include <numeric>

namespace spaug::detail {
namespace {

// Convolves `count` interleaved lines. `n` samples per line, consecutive
// samples `step` apart, lines `line_stride` apart, `channels` interleaved.
void convolve_lines(float* data, int lines, int n, std::ptrdiff_t step,
                    std::ptrdiff_t line_stride, int channels,
                    std::span<const float> kernel) {
  const int r = static_cast<int>(kernel.size() / 2);
  std::vector<float> padded(static_cast<std::size_t>(n + 2 * r) * channels);
  for (int line = 0; line < lines; ++line) {
    float* base = data + line * line_stride;
    for (int i = -r; i < n + r; ++i) {
      const float* src = base + clamp_index(i, n) * step;
      for (int c = 0; c < channels; ++c) {
        padded[static_cast<std::size_t>(i + r) * channels + c] = src[c];
      }
    }
    for (int i = 0; i < n; ++i) {
      float* dst = base + i * step;
      for (int c = 0; c < channels; ++c) {
        float acc = 0.0f;
        const float* p = padded.data() + static_cast<std::size_t>(i) * channels + c;
        for (std::size_t t = 0; t < kernel.size(); ++t) {
          acc += kernel[t] * p[t * channels];
        }
        dst[c] = acc;
      }
    }
  }
}

}  // namespace

std::vector<float> gaussian_kernel(double sigma) {
  const int r = gaussian_radius(sigma);
  if (r == 0) return {1.0f};
  std::vector<double> w(2 * r + 1);
  for (int i = -r; i <= r; ++i) w[i + r] = std::exp(-0.5 * i * i / (sigma * sigma));
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<float> k(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) k[i] = static_cast<float>(w[i] / sum);
  return k;
}

void convolve_separable(Image& image, std::span<const float> kernel) {
  if (kernel.size() <= 1) return;
  const int h = image.height();
  const int w = image.width();
  float* d = image.data().data();
  convolve_lines(d, h, w, 3, static_cast<std::ptrdiff_t>(w) * 3, 3, kernel);
  convolve_lines(d, w, h, static_cast<std::ptrdiff_t>(w) * 3, 3, 3, kernel);
}

void convolve_separable(Plane& plane, std::span<const float> kernel) {
  if (kernel.size() <= 1) return;
  float* d = plane.values.data();
  convolve_lines(d, plane.height, plane.width, 1, plane.width, 1, kernel);
  convolve_lines(d, plane.width, plane.height, plane.width, 1, 1, kernel);
}

Image convolve_2d(const Image& image, const Plane& kernel) {
  const int h = image.height();
  const int w = image.width();
  const int r = kernel.width / 2;
  const int pw = w + 2 * r;
  const int ph = h + 2 * r;
  std::vector<float> padded(static_cast<std::size_t>(pw) * ph * 3);
  for (int y = 0; y < ph; ++y) {
    const int sy = clamp_index(y - r, h);
    for (int x = 0; x < pw; ++x) {
      const int sx = clamp_index(x - r, w);
      for (int c = 0; c < 3; ++c) {
        padded[(static_cast<std::size_t>(y) * pw + x) * 3 + c] = image.at(sy, sx, c);
      }
    }
  }
  Image out(h, w, 0.0f);
  float* o = out.data().data();
  const std::size_t row_len = static_cast<std::size_t>(w) * 3;
  for (int ky = 0; ky < kernel.height; ++ky) {
    for (int kx = 0; kx < kernel.width; ++kx) {
      const float wgt = kernel.at(ky, kx);
      if (wgt == 0.0f) continue;
      for (int y = 0; y < h; ++y) {
        const float* src = padded.data() + (static_cast<std::size_t>(y + ky) * pw + kx) * 3;
        float* dst = o + static_cast<std::size_t>(y) * row_len;
        for (std::size_t i = 0; i < row_len; ++i) dst[i] += wgt * src[i];
      }
    }
  }
  return out;
}

Image median_filter(const Image& image, int size) {
  const int h = image.height();
  const int w = image.width();
  const int r = size / 2;
  Image out(h, w, 0.0f);
  std::vector<float> window(static_cast<std::size_t>(size) * size);
  const auto mid = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        std::size_t n = 0;
        for (int dy = -r; dy <= r; ++dy) {
          const int sy = clamp_index(y + dy, h);
          for (int dx = -r; dx <= r; ++dx) {
            window[n++] = image.at(sy, clamp_index(x + dx, w), c);
          }
        }
        std::nth_element(window.begin(), mid, window.end());
        out.at(y, x, c) = *mid;
      }
    }
  }
  return out;
}

void sample_bilinear(const Image& image, float y, float x, float out[3]) {
  const int h = image.height();
  const int w = image.width();
  y = std::clamp(y, 0.0f, static_cast<float>(h - 1));
  x = std::clamp(x, 0.0f, static_cast<float>(w - 1));
  const int y0 = static_cast<int>(y);
  const int x0 = static_cast<int>(x);
  const float fy = y - static_cast<float>(y0);
  const float fx = x - static_cast<float>(x0);
  const int y1 = std::min(y0 + 1, h - 1);
  const int x1 = std::min(x0 + 1, w - 1);
  for (int c = 0; c < 3; ++c) {
    if (fy == 0.0f && fx == 0.0f) {
      out[c] = image.at(y0, x0, c);
      continue;
    }
    const float top = image.at(y0, x0, c) * (1.0f - fx) + image.at(y0, x1, c) * fx;
    const float bot = image.at(y1, x0, c) * (1.0f - fx) + image.at(y1, x1, c) * fx;
    out[c] = top * (1.0f - fy) + bot * fy;
  }
}

float sample_bilinear(const Plane& plane, float y, float x) {
  y = std::clamp(y, 0.0f, static_cast<float>(plane.height - 1));
  x = std::clamp(x, 0.0f, static_cast<float>(plane.width - 1));
  const int y0 = static_cast<int>(y);
  const int x0 = static_cast<int>(x);
  const float fy = y - static_cast<float>(y0);
  const float fx = x - static_cast<float>(x0);
  if (fy == 0.0f && fx == 0.0f) return plane.at(y0, x0);
  const int y1 = std::min(y0 + 1, plane.height - 1);
  const int x1 = std::min(x0 + 1, plane.width - 1);
  const float top = plane.at(y0, x0) * (1.0f - fx) + plane.at(y0, x1) * fx;
  const float bot = plane.at(y1, x0) * (1.0f - fx) + plane.at(y1, x1) * fx;
  return top * (1.0f - fy) + bot * fy;
}

std::vector<float> motion_weights(int length, double sigma) {
  std::vector<double> w(static_cast<std::size_t>(std::max(1, length)));
  for (std::size_t t = 0; t < w.size(); ++t) {
    const double d = static_cast<double>(t);
    w[t] = std::exp(-0.5 * d * d / (sigma * sigma));
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<float> k(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) k[t] = static_cast<float>(w[t] / sum);
  return k;
}

Image line_blur(const Image& image, std::span<const float> weights, double angle_rad) {
  if (weights.size() <= 1) return image;
  const auto dx = static_cast<float>(std::cos(angle_rad));
  const auto dy = static_cast<float>(std::sin(angle_rad));
  Image out(image.height(), image.width(), 0.0f);
  float px[3];
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      float acc[3] = {0.0f, 0.0f, 0.0f};
      for (std::size_t t = 0; t < weights.size(); ++t) {
        const float ft = static_cast<float>(t);
        sample_bilinear(image, static_cast<float>(y) - ft * dy,
                        static_cast<float>(x) - ft * dx, px);
        for (int c = 0; c < 3; ++c) acc[c] += weights[t] * px[c];
      }
      for (int c = 0; c < 3; ++c) out.at(y, x, c) = acc[c];
    }
  }
  return out;
}

Plane line_blur(const Plane& plane, std::span<const float> weights, double angle_rad) {
  if (weights.size() <= 1) return plane;
  const auto dx = static_cast<float>(std::cos(angle_rad));
  const auto dy = static_cast<float>(std::sin(angle_rad));
  Plane out(plane.height, plane.width);
  for (int y = 0; y < plane.height; ++y) {
    for (int x = 0; x < plane.width; ++x) {
      float acc = 0.0f;
      for (std::size_t t = 0; t < weights.size(); ++t) {
        const float ft = static_cast<float>(t);
        acc += weights[t] * sample_bilinear(plane, static_cast<float>(y) - ft * dy,
                                            static_cast<float>(x) - ft * dx);
      }
      out.at(y, x) = acc;
    }
  }
  return out;
}

Image center_zoom(const Image& image, double zoom) {
  const int h = image.height();
  const int w = image.width();
  const double cy = 0.5 * h;
  const double cx = 0.5 * w;
  Image out(h, w, 0.0f);
  float px[3];
  for (int y = 0; y < h; ++y) {
    const auto sy = static_cast<float>((y + 0.5 - cy) / zoom + cy - 0.5);
    for (int x = 0; x < w; ++x) {
      const auto sx = static_cast<float>((x + 0.5 - cx) / zoom + cx - 0.5);
      sample_bilinear(image, sy, sx, px);
      for (int c = 0; c < 3; ++c) out.at(y, x, c) = px[c];
    }
  }
  return out;
}

Plane resize_bilinear(const Plane& plane, int h, int w) {
  Plane out(h, w);
  const double sy = static_cast<double>(plane.height) / h;
  const double sx = static_cast<double>(plane.width) / w;
  for (int y = 0; y < h; ++y) {
    const auto fy = static_cast<float>((y + 0.5) * sy - 0.5);
    for (int x = 0; x < w; ++x) {
      const auto fx = static_cast<float>((x + 0.5) * sx - 0.5);
      out.at(y, x) = sample_bilinear(plane, fy, fx);
    }
  }
  return out;
}

}  // namespace spaug::detail
