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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "expect_error.hpp"
#include "spaug/imgcorrupt/image.hpp"

namespace spaug {
namespace {

TEST(Image, ConstructionAndLayout) {
  Image img(8, 10, 0.25f);
  EXPECT_EQ(img.height(), 8);
  EXPECT_EQ(img.width(), 10);
  EXPECT_EQ(img.pixel_count(), 80u);
  EXPECT_EQ(img.data().size(), 240u);
  img.at(2, 3, 1) = 0.75f;
  // Row-major, channels interleaved.
  EXPECT_EQ(img.data()[(2 * 10 + 3) * 3 + 1], 0.75f);
}

TEST(Image, RejectsTinyOrMismatchedBuffers) {
  EXPECT_SPAUG_ERROR(Image(7, 8), ErrorCode::kShape);
  EXPECT_SPAUG_ERROR(Image(8, 0), ErrorCode::kShape);
  EXPECT_SPAUG_ERROR(Image(8, 8, std::vector<float>(10)), ErrorCode::kShape);
}

TEST(Image, ClampMapsNanToZero) {
  Image img(8, 8, 0.5f);
  img.at(0, 0, 0) = -0.5f;
  img.at(0, 0, 1) = 1.5f;
  img.at(0, 0, 2) = std::numeric_limits<float>::quiet_NaN();
  img.at(1, 1, 0) = std::numeric_limits<float>::infinity();
  img.clamp();
  EXPECT_EQ(img.at(0, 0, 0), 0.0f);
  EXPECT_EQ(img.at(0, 0, 1), 1.0f);
  EXPECT_EQ(img.at(0, 0, 2), 0.0f);
  EXPECT_EQ(img.at(1, 1, 0), 1.0f);
  EXPECT_EQ(img.at(2, 2, 2), 0.5f);
}

TEST(Image, MseAndPsnrAgainstHandComputation) {
  Image a(8, 8, 0.5f), b(8, 8, 0.5f);
  EXPECT_EQ(mse(a, b), 0.0);
  EXPECT_TRUE(std::isinf(psnr(a, b)));
  // One sample off by 0.5: mse = 0.25 / 192.
  b.at(3, 4, 2) = 1.0f;
  EXPECT_DOUBLE_EQ(mse(a, b), 0.25 / 192.0);
  EXPECT_NEAR(psnr(a, b), 10.0 * std::log10(192.0 / 0.25), 1e-12);
  // Uniform offset 0.1 everywhere: psnr = 20 dB.
  Image c(8, 8, 0.6f);
  EXPECT_NEAR(psnr(a, c), 20.0, 1e-5);
  EXPECT_SPAUG_ERROR(mse(a, Image(8, 9)), ErrorCode::kShape);
}

TEST(Image, ChannelMeansAndLuminance) {
  Image img(8, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      img.at(y, x, 0) = x < 4 ? 0.0f : 1.0f;  // mean 0.5
      img.at(y, x, 1) = 0.25f;
      img.at(y, x, 2) = y == 0 ? 0.8f : 0.0f;  // mean 0.1
    }
  }
  const auto m = channel_means(img);
  EXPECT_DOUBLE_EQ(m[0], 0.5);
  EXPECT_DOUBLE_EQ(m[1], 0.25);
  EXPECT_NEAR(m[2], 0.1, 1e-7);
  EXPECT_NEAR(mean_luminance(img), 0.299 * 0.5 + 0.587 * 0.25 + 0.114 * 0.1, 1e-7);
}

}  // namespace
}  // namespace spaug
