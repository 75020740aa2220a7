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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace spaug {

/// H x W x 3 RGB raster with float intensities in [0, 1], stored row-major
/// with interleaved channels. Corruptions never change the dimensions.
class Image {
 public:
  static constexpr int kChannels = 3;
  static constexpr int kMinSide = 8;

  Image() = default;
  Image(int height, int width, float fill = 0.0f);
  Image(int height, int width, std::vector<float> data);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
  }
  bool empty() const noexcept { return data_.empty(); }

  float& at(int y, int x, int c) noexcept { return data_[index(y, x, c)]; }
  float at(int y, int x, int c) const noexcept { return data_[index(y, x, c)]; }

  std::span<float> data() noexcept { return data_; }
  std::span<const float> data() const noexcept { return data_; }

  /// Clamps every intensity into [0, 1]; NaN becomes 0.
  void clamp() noexcept;

  bool same_shape(const Image& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int y, int x, int c) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) * kChannels + static_cast<std::size_t>(c);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<float> data_;
};

/// Mean squared error over all samples. Images must share a shape.
double mse(const Image& a, const Image& b);

/// Peak signal-to-noise ratio in dB for unit peak. Identical images give +inf.
double psnr(const Image& a, const Image& b);

/// Per-channel mean intensity.
std::array<double, 3> channel_means(const Image& image);

/// Rec.601 luma averaged over the image.
double mean_luminance(const Image& image);

}  // namespace spaug
