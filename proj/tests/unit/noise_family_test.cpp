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

double sample_std(const Image& img) {
  double sum = 0.0, sq = 0.0;
  for (float v : img.data()) sum += v;
  const double mean = sum / static_cast<double>(img.data().size());
  for (float v : img.data()) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / static_cast<double>(img.data().size() - 1));
}

double mean_of(const Image& img) {
  double sum = 0.0;
  for (float v : img.data()) sum += v;
  return sum / static_cast<double>(img.data().size());
}

TEST(NoiseFamily, GaussianZeroSigmaIsIdentity) {
  const auto img = testing::synthetic_image(0, 64);
  const auto out = noise_family(img, K::kGaussianNoise, {{"sigma", 0.0}}, 3);
  for (std::size_t i = 0; i < img.data().size(); ++i) {
    EXPECT_LT(std::abs(out.data()[i] - img.data()[i]), 1e-6f);
  }
}

TEST(NoiseFamily, GaussianSampleStdMatchesSigma) {
  const Image flat(256, 256, 0.5f);
  const auto out = noise_family(flat, K::kGaussianNoise, {{"sigma", 0.08}}, 42);
  const double sd = sample_std(out);
  EXPECT_GE(sd, 0.075);
  EXPECT_LE(sd, 0.085);
  EXPECT_NEAR(mean_of(out), 0.5, 0.002);
}

TEST(NoiseFamily, ShotNoiseIsUnbiasedWithPoissonVariance) {
  const Image flat(256, 256, 0.4f);
  const double lambda = 25.0;
  const auto out = noise_family(flat, K::kShotNoise, {{"lambda", lambda}}, 9);
  EXPECT_NEAR(mean_of(out), 0.4, 0.003);
  // Var(Poisson(x lambda) / lambda) = x / lambda.
  EXPECT_NEAR(sample_std(out), std::sqrt(0.4 / lambda), 0.003);
}

TEST(NoiseFamily, SpeckleScalesWithIntensity) {
  const Image flat(256, 256, 0.4f);
  const auto out = noise_family(flat, K::kSpeckleNoise, {{"sigma", 0.2}}, 4);
  EXPECT_NEAR(mean_of(out), 0.4, 0.002);
  EXPECT_NEAR(sample_std(out), 0.4 * 0.2, 0.002);
  const Image black(32, 32, 0.0f);
  EXPECT_EQ(noise_family(black, K::kSpeckleNoise, {{"sigma", 0.5}}, 4), black);
}

TEST(NoiseFamily, ImpulseSetsWholePixelsToBlackOrWhite) {
  const Image flat(128, 128, 0.5f);
  const auto out = noise_family(flat, K::kImpulseNoise, {{"rate", 0.2}}, 5);
  int black = 0, white = 0;
  for (int y = 0; y < 128; ++y) {
    for (int x = 0; x < 128; ++x) {
      const float v = out.at(y, x, 0);
      EXPECT_EQ(out.at(y, x, 1), v);
      EXPECT_EQ(out.at(y, x, 2), v);
      black += v == 0.0f;
      white += v == 1.0f;
    }
  }
  EXPECT_NEAR((black + white) / 16384.0, 0.2, 0.01);
  EXPECT_NEAR(static_cast<double>(black) / (black + white), 0.5, 0.04);
}

TEST(NoiseFamily, DropoutZeroRateIsIdentityAndRateMatches) {
  const auto img = testing::synthetic_image(5, 64);
  EXPECT_EQ(noise_family(img, K::kDropout, {{"rate", 0.0}}, 1), img);
  const Image flat(256, 256, 0.7f);
  const auto out = noise_family(flat, K::kDropout, {{"rate", 0.15}}, 1);
  int zeroed = 0;
  for (int y = 0; y < 256; ++y) {
    for (int x = 0; x < 256; ++x) zeroed += out.at(y, x, 0) == 0.0f;
  }
  EXPECT_NEAR(zeroed / 65536.0, 0.15, 0.01);
}

TEST(NoiseFamily, SpatterOnlyBrightensInsideDrops) {
  const Image flat(128, 128, 0.3f);
  const auto out = noise_family(flat, K::kSpatter,
                                {{"sigma", 3.0}, {"threshold", 1.0}, {"intensity", 0.6}}, 8);
  int changed = 0;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    EXPECT_GE(out.data()[i], 0.3f);
    changed += out.data()[i] != 0.3f;
  }
  const double frac = changed / static_cast<double>(out.data().size());
  // Roughly the upper tail beyond one standard deviation.
  EXPECT_GT(frac, 0.03);
  EXPECT_LT(frac, 0.3);
}

TEST(NoiseFamily, ParameterRangesEnforced) {
  const Image img(16, 16, 0.5f);
  EXPECT_SPAUG_ERROR(noise_family(img, K::kImpulseNoise, {{"rate", 1.5}}, 1),
                     ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(noise_family(img, K::kShotNoise, {{"lambda", 0.0}}, 1),
                     ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(noise_family(img, K::kGaussianNoise, {{"sigma", -0.1}}, 1),
                     ErrorCode::kInvalidSpec);
}

}  // namespace
}  // namespace spaug
