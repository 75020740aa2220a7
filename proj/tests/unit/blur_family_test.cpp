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

#include <algorithm>
#include <cmath>
#include <vector>

#include "expect_error.hpp"
#include "spaug/imgcorrupt/corrupt.hpp"
#include "synthetic.hpp"

namespace spaug {
namespace {

using K = CorruptionKind;

double mean_of(const Image& img) {
  double sum = 0.0;
  for (float v : img.data()) sum += v;
  return sum / static_cast<double>(img.data().size());
}

struct BlurCase {
  K kind;
  ParamSet params;
};

std::vector<BlurCase> linear_blurs() {
  return {
      {K::kGaussianBlur, {{"sigma", 2.0}}},
      {K::kAverageBlur, {{"size", 5.0}}},
      {K::kDefocusBlur, {{"radius", 4.0}, {"alias_sigma", 0.5}}},
      {K::kMotionBlur, {{"length", 9.0}, {"sigma", 5.0}}},
      {K::kZoomBlur, {{"max_zoom", 1.2}, {"step", 0.02}}},
      {K::kGlassBlur, {{"sigma", 0.9}, {"max_delta", 2.0}, {"iterations", 1.0}}},
  };
}

TEST(BlurFamily, ConstantImageStaysConstant) {
  const Image flat(64, 64, 0.37f);
  for (const auto& c : linear_blurs()) {
    const auto out = blur_family(flat, c.kind, c.params, 11);
    for (float v : out.data()) ASSERT_NEAR(v, 0.37f, 1e-6f) << to_string(c.kind);
  }
  const auto med = blur_family(flat, K::kMedianBlur, {{"size", 5.0}}, 1);
  EXPECT_EQ(med, flat);
}

TEST(BlurFamily, LinearBlursPreserveMean) {
  const auto img = testing::synthetic_image(6, 256);
  const double before = mean_of(img);
  for (auto kind : {K::kGaussianBlur, K::kAverageBlur, K::kDefocusBlur}) {
    const auto out = corrupt(img, {kind, 2, 3});
    EXPECT_NEAR(mean_of(out), before, 1e-3) << to_string(kind);
  }
}

TEST(BlurFamily, IdentityParameterPoints) {
  const auto img = testing::synthetic_image(7, 64);
  EXPECT_EQ(blur_family(img, K::kMotionBlur, {{"length", 1.0}, {"sigma", 1.0}}, 3), img);
  EXPECT_EQ(blur_family(img, K::kMedianBlur, {{"size", 1.0}}, 3), img);
  EXPECT_EQ(blur_family(img, K::kZoomBlur, {{"max_zoom", 1.0}, {"step", 0.01}}, 3), img);
  EXPECT_EQ(blur_family(img, K::kDefocusBlur, {{"radius", 0.0}, {"alias_sigma", 0.0}}, 3), img);
  EXPECT_EQ(blur_family(img, K::kGaussianBlur, {{"sigma", 0.0}}, 3), img);
}

TEST(BlurFamily, GaussianImpulseMatchesBruteForceConvolution) {
  constexpr int kN = 33;
  constexpr double kSigma = 2.0;
  Image img(kN, kN, 0.0f);
  for (int c = 0; c < 3; ++c) img.at(16, 16, c) = 1.0f;
  const auto out = blur_family(img, K::kGaussianBlur, {{"sigma", kSigma}}, 0);

  // Oracle: separable truncated gaussian, radius ceil(3 sigma), normalized.
  const int r = static_cast<int>(std::ceil(3 * kSigma));
  std::vector<double> g;
  double norm = 0.0;
  for (int t = -r; t <= r; ++t) {
    g.push_back(std::exp(-t * t / (2 * kSigma * kSigma)));
    norm += g.back();
  }
  for (double& v : g) v /= norm;
  for (int y = 0; y < kN; ++y) {
    for (int x = 0; x < kN; ++x) {
      const int dy = y - 16, dx = x - 16;
      const double expected = (std::abs(dy) <= r && std::abs(dx) <= r) ? g[dy + r] * g[dx + r] : 0.0;
      for (int c = 0; c < 3; ++c) ASSERT_NEAR(out.at(y, x, c), expected, 1e-6) << y << "," << x;
    }
  }
}

TEST(BlurFamily, AverageBlurMatchesBoxOracleAwayFromEdges) {
  const auto img = testing::synthetic_image(8, 32);
  const auto out = blur_family(img, K::kAverageBlur, {{"size", 3.0}}, 0);
  for (int y = 1; y < 31; ++y) {
    for (int x = 1; x < 31; ++x) {
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) sum += img.at(y + dy, x + dx, c);
        }
        ASSERT_NEAR(out.at(y, x, c), sum / 9.0, 1e-6);
      }
    }
  }
}

TEST(BlurFamily, MedianRemovesIsolatedImpulses) {
  Image img(16, 16, 0.4f);
  img.at(5, 5, 0) = 1.0f;
  img.at(9, 3, 2) = 0.0f;
  EXPECT_EQ(blur_family(img, K::kMedianBlur, {{"size", 3.0}}, 0), Image(16, 16, 0.4f));
}

TEST(BlurFamily, MotionBlurSmearsAnEdge) {
  Image img(64, 64, 0.0f);
  for (int y = 0; y < 64; ++y) {
    for (int x = 32; x < 64; ++x) {
      for (int c = 0; c < 3; ++c) img.at(y, x, c) = 1.0f;
    }
  }
  const auto out = blur_family(img, K::kMotionBlur, {{"length", 9.0}, {"sigma", 5.0}}, 21);
  EXPECT_NE(out, img);
  EXPECT_EQ(out, blur_family(img, K::kMotionBlur, {{"length", 9.0}, {"sigma", 5.0}}, 21));
}

TEST(BlurFamily, OversizedKernelsRejected) {
  const Image img(16, 16, 0.5f);
  EXPECT_SPAUG_ERROR(blur_family(img, K::kGaussianBlur, {{"sigma", 3.0}}, 0),
                     ErrorCode::kInvalidSpec);  // radius 9 > 8
  EXPECT_SPAUG_ERROR(blur_family(img, K::kAverageBlur, {{"size", 19.0}}, 0),
                     ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(blur_family(img, K::kDefocusBlur, {{"radius", 9.0}, {"alias_sigma", 0.5}}, 0),
                     ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(blur_family(img, K::kMotionBlur, {{"length", 10.0}, {"sigma", 1.0}}, 0),
                     ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(blur_family(img, K::kMedianBlur, {{"size", 4.0}}, 0),
                     ErrorCode::kInvalidSpec);
}

}  // namespace
}  // namespace spaug
