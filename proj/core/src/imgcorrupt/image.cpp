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

#include "spaug/imgcorrupt/image.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spaug/common/error.hpp"

namespace spaug {
namespace {

void check_dims(int height, int width) {
  if (height < Image::kMinSide || width < Image::kMinSide) {
    fail(ErrorCode::kShape, "image must be at least " +
                                std::to_string(Image::kMinSide) + "x" +
                                std::to_string(Image::kMinSide) + ", got " +
                                std::to_string(height) + "x" +
                                std::to_string(width));
  }
}

}  // namespace

Image::Image(int height, int width, float fill) : height_(height), width_(width) {
  check_dims(height, width);
  data_.assign(pixel_count() * kChannels, fill);
}

Image::Image(int height, int width, std::vector<float> data)
    : height_(height), width_(width), data_(std::move(data)) {
  check_dims(height, width);
  if (data_.size() != pixel_count() * kChannels) {
    fail(ErrorCode::kShape, "pixel buffer has " + std::to_string(data_.size()) +
                                " samples, expected " +
                                std::to_string(pixel_count() * kChannels));
  }
}

void Image::clamp() noexcept {
  for (float& v : data_) {
    if (!(v > 0.0f)) {
      v = 0.0f;
    } else if (v > 1.0f) {
      v = 1.0f;
    }
  }
}

double mse(const Image& a, const Image& b) {
  if (!a.same_shape(b)) fail(ErrorCode::kShape, "mse: image shapes differ");
  const auto da = a.data();
  const auto db = b.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
    sum += d * d;
  }
  return da.empty() ? 0.0 : sum / static_cast<double>(da.size());
}

double psnr(const Image& a, const Image& b) {
  const double e = mse(a, b);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / e);
}

std::array<double, 3> channel_means(const Image& image) {
  std::array<double, 3> sums{0.0, 0.0, 0.0};
  const auto d = image.data();
  for (std::size_t i = 0; i < d.size(); i += 3) {
    sums[0] += d[i];
    sums[1] += d[i + 1];
    sums[2] += d[i + 2];
  }
  const double n = static_cast<double>(image.pixel_count());
  for (double& s : sums) s /= n;
  return sums;
}

double mean_luminance(const Image& image) {
  const auto m = channel_means(image);
  return 0.299 * m[0] + 0.587 * m[1] + 0.114 * m[2];
}

}  // namespace spaug
