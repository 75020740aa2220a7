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

#pragma once

// Internal raster helpers shared by the corruption families. All convolutions
// replicate edge pixels.

#include <cmath>
#include <span>
#include <vector>

#include "spaug/imgcorrupt/image.hpp"

namespace spaug::detail {

struct Plane {
  Plane() = default;
  Plane(int h, int w, float fill = 0.0f)
      : height(h), width(w), values(static_cast<std::size_t>(h) * w, fill) {}

  float& at(int y, int x) { return values[static_cast<std::size_t>(y) * width + x]; }
  float at(int y, int x) const { return values[static_cast<std::size_t>(y) * width + x]; }

  int height = 0;
  int width = 0;
  std::vector<float> values;
};

inline int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

/// Normalized 1-D gaussian taps, radius ceil(3 sigma); sigma <= 0 gives {1}.
std::vector<float> gaussian_kernel(double sigma);
inline int gaussian_radius(double sigma) {
  return sigma <= 0.0 ? 0 : static_cast<int>(std::ceil(3.0 * sigma));
}

/// Symmetric odd-length kernel applied along rows then columns.
void convolve_separable(Image& image, std::span<const float> kernel);
void convolve_separable(Plane& plane, std::span<const float> kernel);

/// Full 2-D convolution with an odd-sized square kernel (kernel.height ==
/// kernel.width).
Image convolve_2d(const Image& image, const Plane& kernel);

Image median_filter(const Image& image, int size);

/// Bilinear sample at continuous pixel coordinates; coordinates outside the
/// raster are clamped to the border. Integer coordinates return the stored
/// value exactly.
void sample_bilinear(const Image& image, float y, float x, float out[3]);
float sample_bilinear(const Plane& plane, float y, float x);

/// One-sided line blur: out(p) = sum_t w_t * in(p - t * (cos a, sin a)).
Image line_blur(const Image& image, std::span<const float> weights, double angle_rad);
Plane line_blur(const Plane& plane, std::span<const float> weights, double angle_rad);

/// Gaussian-weighted one-sided taps for a motion kernel.
std::vector<float> motion_weights(int length, double sigma);

/// Center-anchored magnification by `zoom` (>= 1), bilinear.
Image center_zoom(const Image& image, double zoom);

/// Resizes a plane to (h, w) with bilinear interpolation, pixel centers aligned.
Plane resize_bilinear(const Plane& plane, int h, int w);

}  // namespace spaug::detail
