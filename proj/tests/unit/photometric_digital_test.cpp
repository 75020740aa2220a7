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

#include "expect_error.hpp"
#include "spaug/imgcorrupt/corrupt.hpp"
#include "synthetic.hpp"

namespace spaug {
namespace {

using K = CorruptionKind;

TEST(Photometric, IdentityPoints) {
  const auto img = testing::synthetic_image(0, 64);
  EXPECT_EQ(photometric_family(img, K::kBrightness, {{"delta", 0.0}}), img);
  const auto c1 = photometric_family(img, K::kContrast, {{"factor", 1.0}});
  const auto s1 = photometric_family(img, K::kSaturate, {{"factor", 1.0}});
  for (std::size_t i = 0; i < img.data().size(); ++i) {
    EXPECT_NEAR(c1.data()[i], img.data()[i], 1e-6f);
    EXPECT_NEAR(s1.data()[i], img.data()[i], 1e-6f);
  }
}

TEST(Photometric, ZeroContrastCollapsesToChannelMeans) {
  const auto img = testing::synthetic_image(1, 64);
  double means[3] = {0, 0, 0};
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      for (int c = 0; c < 3; ++c) means[c] += img.at(y, x, c);
    }
  }
  const auto out = photometric_family(img, K::kContrast, {{"factor", 0.0}});
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      for (int c = 0; c < 3; ++c) ASSERT_NEAR(out.at(y, x, c), means[c] / 4096.0, 1e-6);
    }
  }
}

TEST(Photometric, BrightnessAddsDeltaInTheInterior) {
  const Image flat(16, 16, 0.3f);
  const auto out = photometric_family(flat, K::kBrightness, {{"delta", 0.25}});
  for (float v : out.data()) EXPECT_NEAR(v, 0.55f, 1e-6f);
  const auto clipped = photometric_family(flat, K::kBrightness, {{"delta", 0.9}});
  for (float v : clipped.data()) EXPECT_EQ(v, 1.0f);
}

TEST(Photometric, ZeroSaturationGivesGray) {
  const auto img = testing::synthetic_image(2, 32);
  const auto out = photometric_family(img, K::kSaturate, {{"factor", 0.0}});
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) {
      const double luma = 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) + 0.114 * img.at(y, x, 2);
      for (int c = 0; c < 3; ++c) ASSERT_NEAR(out.at(y, x, c), luma, 1e-6);
    }
  }
}

TEST(Digital, ElasticWithZeroAlphaIsIdentity) {
  const auto img = testing::synthetic_image(3, 64);
  EXPECT_EQ(digital_family(img, K::kElastic, {{"alpha", 0.0}, {"sigma", 0.04}}, 9), img);
  EXPECT_NE(digital_family(img, K::kElastic, {{"alpha", 0.03}, {"sigma", 0.04}}, 9), img);
}

TEST(Digital, PixelateKeepsBlockConstantImages) {
  Image blocks(32, 32);
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) {
      for (int c = 0; c < 3; ++c) {
        blocks.at(y, x, c) = static_cast<float>(((y / 4) * 8 + (x / 4) + c * 5) % 17) / 16.0f;
      }
    }
  }
  EXPECT_EQ(digital_family(blocks, K::kPixelate, {{"factor", 4.0}}, 0), blocks);
  const auto img = testing::synthetic_image(4, 32);
  EXPECT_EQ(digital_family(img, K::kPixelate, {{"factor", 1.0}}, 0), img);
}

TEST(Digital, PixelateAveragesBlocksIncludingPartialOnes) {
  const auto img = testing::synthetic_image(5, 30);  // 30 = 7 * 4 + 2
  const auto out = digital_family(img, K::kPixelate, {{"factor", 4.0}}, 0);
  for (int by = 0; by < 30; by += 4) {
    for (int bx = 0; bx < 30; bx += 4) {
      const int ey = std::min(by + 4, 30), ex = std::min(bx + 4, 30);
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int y = by; y < ey; ++y) {
          for (int x = bx; x < ex; ++x) sum += img.at(y, x, c);
        }
        const double mean = sum / ((ey - by) * (ex - bx));
        for (int y = by; y < ey; ++y) {
          for (int x = bx; x < ex; ++x) ASSERT_NEAR(out.at(y, x, c), mean, 1e-6);
        }
      }
    }
  }
  EXPECT_SPAUG_ERROR(digital_family(img, K::kPixelate, {{"factor", 0.0}}, 0), ErrorCode::kInvalidSpec);
}

TEST(Digital, JpegQualityOrdersPsnr) {
  const auto img = testing::synthetic_image(6, 128);
  double last = 1e9;
  for (int q : {95, 60, 25}) {
    const auto out = digital_family(img, K::kJpegCompression, {{"quality", static_cast<double>(q)}}, 0);
    ASSERT_TRUE(out.same_shape(img));
    const double p = psnr(img, out);
    EXPECT_LT(p, last) << q;
    last = p;
  }
}

}  // namespace
}  // namespace spaug
