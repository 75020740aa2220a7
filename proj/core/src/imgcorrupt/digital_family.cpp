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

#include "family_common.hpp"
#include "raster_ops.hpp"
#include "spaug/imgcorrupt/jpeg.hpp"

namespace spaug {
namespace {

using detail::Plane;
using K = CorruptionKind;

// Displacements are independent uniform fields smoothed by a gaussian,
// rescaled so the largest |component| equals alpha * min(H, W) pixels, then
// used for a bilinear pull-back.
Image elastic(const Image& in, double alpha, double sigma, Rng rng) {
  const int h = in.height();
  const int w = in.width();
  const double side = std::min(h, w);
  Plane dx(h, w);
  Plane dy(h, w);
  for (float& v : dx.values) v = static_cast<float>(rng.uniform(-1.0, 1.0));
  for (float& v : dy.values) v = static_cast<float>(rng.uniform(-1.0, 1.0));
  if (alpha == 0.0) return in;
  const auto kernel = detail::gaussian_kernel(sigma * side);
  detail::convolve_separable(dx, kernel);
  detail::convolve_separable(dy, kernel);
  float peak = 0.0f;
  for (float v : dx.values) peak = std::max(peak, std::fabs(v));
  for (float v : dy.values) peak = std::max(peak, std::fabs(v));
  if (peak == 0.0f) return in;
  const auto gain = static_cast<float>(alpha * side / peak);
  Image out(h, w, 0.0f);
  float px[3];
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      detail::sample_bilinear(in, static_cast<float>(y) + gain * dy.at(y, x),
                              static_cast<float>(x) + gain * dx.at(y, x), px);
      for (int c = 0; c < 3; ++c) out.at(y, x, c) = px[c];
    }
  }
  return out;
}

// Box downsample then nearest-neighbour upsample: every factor x factor block
// (clipped at the right/bottom border) is replaced by its mean.
Image pixelate(const Image& in, int factor) {
  if (factor < 1) fail(ErrorCode::kInvalidSpec, "pixelate: factor must be >= 1");
  if (factor == 1) return in;
  Image out = in;
  for (int by = 0; by < in.height(); by += factor) {
    const int ey = std::min(by + factor, in.height());
    for (int bx = 0; bx < in.width(); bx += factor) {
      const int ex = std::min(bx + factor, in.width());
      double sum[3] = {0.0, 0.0, 0.0};
      for (int y = by; y < ey; ++y) {
        for (int x = bx; x < ex; ++x) {
          for (int c = 0; c < 3; ++c) sum[c] += in.at(y, x, c);
        }
      }
      const double n = static_cast<double>((ey - by) * (ex - bx));
      for (int c = 0; c < 3; ++c) {
        const auto mean = static_cast<float>(sum[c] / n);
        for (int y = by; y < ey; ++y) {
          for (int x = bx; x < ex; ++x) out.at(y, x, c) = mean;
        }
      }
    }
  }
  return out;
}

}  // namespace

Image digital_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                     std::uint64_t seed) {
  if (kind != K::kElastic && kind != K::kPixelate && kind != K::kJpegCompression) {
    detail::wrong_family(kind, "digital");
  }
  validate_params(kind, params);
  Image out;
  switch (kind) {
    case K::kElastic:
      out = elastic(image, params.get("alpha"), params.get("sigma"), detail::stream_for(kind, seed));
      break;
    case K::kPixelate:
      out = pixelate(image, params.get_int("factor"));
      break;
    default:
      out = decode_jpeg(encode_jpeg(image, params.get_int("quality")));
      break;
  }
  out.clamp();
  return out;
}

}  // namespace spaug
