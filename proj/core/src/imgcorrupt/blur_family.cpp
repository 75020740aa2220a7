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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "family_common.hpp"
#include "raster_ops.hpp"

namespace spaug {
namespace detail {

void check_kernel_radius(const Image& image, int radius, CorruptionKind kind) {
  const int limit = std::min(image.height(), image.width()) / 2;
  if (radius > limit) {
    fail(ErrorCode::kInvalidSpec,
         std::string(to_string(kind)) + ": kernel radius " + std::to_string(radius) +
             " exceeds half the shorter image side (" + std::to_string(limit) + ")");
  }
}

}  // namespace detail

namespace {

using detail::Plane;
using K = CorruptionKind;

Plane disk_kernel(double radius, double alias_sigma) {
  const int r = static_cast<int>(std::ceil(radius));
  Plane k(2 * r + 1, 2 * r + 1);
  const double r2 = radius * radius;
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      k.at(y + r, x + r) = (x * x + y * y <= r2) ? 1.0f : 0.0f;
    }
  }
  // Antialias the disk edge. The smoothing stays inside the kernel window.
  if (alias_sigma > 0.0 && r > 0) {
    const auto g = detail::gaussian_kernel(alias_sigma);
    const int gr = static_cast<int>(g.size() / 2);
    Plane tmp(k.height, k.width);
    for (int y = 0; y < k.height; ++y) {
      for (int x = 0; x < k.width; ++x) {
        float acc = 0.0f;
        for (int t = -gr; t <= gr; ++t) {
          const int sx = x + t;
          if (sx >= 0 && sx < k.width) acc += g[t + gr] * k.at(y, sx);
        }
        tmp.at(y, x) = acc;
      }
    }
    for (int y = 0; y < k.height; ++y) {
      for (int x = 0; x < k.width; ++x) {
        float acc = 0.0f;
        for (int t = -gr; t <= gr; ++t) {
          const int sy = y + t;
          if (sy >= 0 && sy < k.height) acc += g[t + gr] * tmp.at(sy, x);
        }
        k.at(y, x) = acc;
      }
    }
  }
  double sum = 0.0;
  for (float v : k.values) sum += v;
  for (float& v : k.values) v = static_cast<float>(v / sum);
  return k;
}

Image defocus_blur(const Image& in, double radius, double alias_sigma) {
  detail::check_kernel_radius(in, static_cast<int>(std::ceil(radius)), K::kDefocusBlur);
  if (radius < 1.0) return in;
  return detail::convolve_2d(in, disk_kernel(radius, alias_sigma));
}

// Smooth, then locally shuffle pixels (bottom-right to top-left scan, each
// swapped with a random neighbour within max_delta), then smooth again.
Image glass_blur(const Image& in, double sigma, int max_delta, int iterations, Rng rng) {
  detail::check_kernel_radius(in, std::max(detail::gaussian_radius(sigma), max_delta),
                              K::kGlassBlur);
  const auto kernel = detail::gaussian_kernel(sigma);
  Image out = in;
  detail::convolve_separable(out, kernel);
  const int h = out.height();
  const int w = out.width();
  if (max_delta > 0) {
    for (int it = 0; it < iterations; ++it) {
      for (int y = h - max_delta - 1; y >= max_delta; --y) {
        for (int x = w - max_delta - 1; x >= max_delta; --x) {
          const int dy = rng.uniform_int(-max_delta, max_delta - 1);
          const int dx = rng.uniform_int(-max_delta, max_delta - 1);
          for (int c = 0; c < 3; ++c) std::swap(out.at(y, x, c), out.at(y + dy, x + dx, c));
        }
      }
    }
  }
  detail::convolve_separable(out, kernel);
  return out;
}

Image motion_blur(const Image& in, int length, double sigma, Rng rng) {
  detail::check_kernel_radius(in, length - 1, K::kMotionBlur);
  const double angle = rng.uniform(-0.25, 0.25) * std::numbers::pi;
  if (length <= 1) return in;
  return detail::line_blur(in, detail::motion_weights(length, sigma), angle);
}

Image zoom_blur(const Image& in, double max_zoom, double step) {
  const int copies = static_cast<int>(std::floor((max_zoom - 1.0) / step + 1e-9));
  if (copies <= 0) return in;
  std::vector<double> acc(in.data().begin(), in.data().end());
  for (int i = 1; i <= copies; ++i) {
    const Image z = detail::center_zoom(in, 1.0 + step * i);
    const auto zd = z.data();
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += zd[j];
  }
  Image out = in;
  auto od = out.data();
  const double n = copies + 1.0;
  for (std::size_t j = 0; j < acc.size(); ++j) od[j] = static_cast<float>(acc[j] / n);
  return out;
}

Image gaussian_blur(const Image& in, double sigma) {
  detail::check_kernel_radius(in, detail::gaussian_radius(sigma), K::kGaussianBlur);
  Image out = in;
  detail::convolve_separable(out, detail::gaussian_kernel(sigma));
  return out;
}

void require_odd(int size, CorruptionKind kind) {
  if (size % 2 == 0) {
    fail(ErrorCode::kInvalidSpec,
         std::string(to_string(kind)) + ": window size must be odd, got " + std::to_string(size));
  }
}

Image average_blur(const Image& in, int size) {
  require_odd(size, K::kAverageBlur);
  detail::check_kernel_radius(in, size / 2, K::kAverageBlur);
  Image out = in;
  const std::vector<float> box(static_cast<std::size_t>(size), 1.0f / static_cast<float>(size));
  detail::convolve_separable(out, box);
  return out;
}

Image median_blur(const Image& in, int size) {
  require_odd(size, K::kMedianBlur);
  detail::check_kernel_radius(in, size / 2, K::kMedianBlur);
  if (size == 1) return in;
  return detail::median_filter(in, size);
}

}  // namespace

Image blur_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                  std::uint64_t seed) {
  switch (kind) {
    case K::kDefocusBlur:
    case K::kGlassBlur:
    case K::kMotionBlur:
    case K::kZoomBlur:
    case K::kGaussianBlur:
    case K::kAverageBlur:
    case K::kMedianBlur:
      break;
    default:
      detail::wrong_family(kind, "blur");
  }
  validate_params(kind, params);
  Image out;
  switch (kind) {
    case K::kDefocusBlur:
      out = defocus_blur(image, params.get("radius"), params.get("alias_sigma"));
      break;
    case K::kGlassBlur:
      out = glass_blur(image, params.get("sigma"), params.get_int("max_delta"),
                       params.get_int("iterations"), detail::stream_for(kind, seed));
      break;
    case K::kMotionBlur:
      out = motion_blur(image, params.get_int("length"), params.get("sigma"),
                        detail::stream_for(kind, seed));
      break;
    case K::kZoomBlur:
      out = zoom_blur(image, params.get("max_zoom"), params.get("step"));
      break;
    case K::kGaussianBlur:
      out = gaussian_blur(image, params.get("sigma"));
      break;
    case K::kAverageBlur:
      out = average_blur(image, params.get_int("size"));
      break;
    default:
      out = median_blur(image, params.get_int("size"));
      break;
  }
  out.clamp();
  return out;
}

}  // namespace spaug
