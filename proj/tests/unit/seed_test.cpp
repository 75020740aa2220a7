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
#include <set>
#include <vector>

#include "spaug/common/seed.hpp"

namespace spaug {
namespace {

// Independent FNV-1a + finalizer, written from the byte-level definition.
std::uint64_t reference_subseed(std::uint64_t seed, const std::string& label) {
  std::vector<unsigned char> bytes;
  for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<unsigned char>(seed >> (8 * i)));
  bytes.insert(bytes.end(), label.begin(), label.end());
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBULL;
  return h ^ (h >> 31);
}

TEST(DeriveSubseed, PinnedGoldenValues) {
  // Values computed with an external script from the same byte definition.
  EXPECT_EQ(derive_subseed(0, ""), 0x813f0174a2367c13ULL);
  EXPECT_EQ(derive_subseed(42, "step0"), 0x72c779b894ba1a6eULL);
  EXPECT_EQ(derive_subseed(42, "step1"), 0x5177ae609636bac5ULL);
  EXPECT_EQ(derive_subseed(0xDEADBEEF, "item:7"), 0xebdf74b489192a27ULL);
}

TEST(DeriveSubseed, MatchesReferenceImplementation) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL, 0x0123456789ABCDEFULL}) {
    for (const char* label : {"", "a", "caption:3", "epoch:12", "policy/kind"}) {
      EXPECT_EQ(derive_subseed(seed, label), reference_subseed(seed, label)) << seed << label;
    }
  }
}

TEST(DeriveSubseed, LabelsSeparateStreams) {
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(derive_subseed(42, "item:" + std::to_string(i)));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_subseed(1, "x"), derive_subseed(2, "x"));
}

TEST(Rng, SequenceIsAFunctionOfTheKey) {
  Rng a(99), b(99), c(100);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
  }
  EXPECT_EQ(a.counter(), 100u);
}

TEST(Rng, CounterAddressing) {
  // n-th output is mix64(key + n * gamma) with n starting at 1.
  Rng r(5);
  EXPECT_EQ(r.next_u64(), mix64(5 + 0x9E3779B97F4A7C15ULL));
  EXPECT_EQ(r.next_u64(), mix64(5 + 2 * 0x9E3779B97F4A7C15ULL));
}

TEST(Rng, UniformRangeAndMoments) {
  Rng r(1);
  double sum = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / kN, 0.5, 0.005);
}

TEST(Rng, BelowIsUnbiasedAndInRange) {
  Rng r(2);
  std::vector<int> counts(7, 0);
  constexpr int kN = 70000;
  for (int i = 0; i < kN; ++i) {
    const auto v = r.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, kN / 7.0, 5 * std::sqrt(kN / 7.0));
  EXPECT_EQ(Rng(3).below(1), 0u);
}

TEST(Rng, UniformIntInclusive) {
  Rng r(3);
  std::set<int> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(r.uniform_int(1, 5));
  EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4, 5}));
}

TEST(Rng, NormalMoments) {
  Rng r(4);
  double sum = 0.0, sq = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double v = r.normal();
    sum += v;
    sq += v * v;
  }
  const double mean = sum / kN;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sq / kN - mean * mean, 1.0, 0.015);
}

class PoissonMoments : public ::testing::TestWithParam<double> {};

TEST_P(PoissonMoments, MeanAndVarianceMatch) {
  const double lambda = GetParam();
  Rng r(static_cast<std::uint64_t>(lambda * 1000));
  double sum = 0.0, sq = 0.0;
  constexpr int kN = 100000;
  for (int i = 0; i < kN; ++i) {
    const auto v = static_cast<double>(r.poisson(lambda));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / kN;
  const double var = sq / kN - mean * mean;
  EXPECT_NEAR(mean, lambda, 5 * std::sqrt(lambda / kN) + 1e-9);
  EXPECT_NEAR(var / std::max(lambda, 1e-9), 1.0, 0.05);
}

// Straddles the switch between the two samplers.
INSTANTIATE_TEST_SUITE_P(Means, PoissonMoments, ::testing::Values(0.5, 3.0, 12.0, 29.0, 31.0, 60.0, 250.0));

TEST(Rng, PoissonOfZeroIsZero) {
  Rng r(8);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(r.poisson(0.0), 0u);
}

TEST(Rng, BernoulliRate) {
  Rng r(9);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += r.bernoulli(0.3);
  EXPECT_NEAR(hits / 100000.0, 0.3, 0.006);
}

}  // namespace
}  // namespace spaug
