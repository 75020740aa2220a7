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

#include <cstdint>
#include <string_view>

namespace spaug {

// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent 64-bit seed from a parent seed and a label.
///
/// The parent seed is serialized as 8 little-endian bytes, followed by the
/// label bytes; the byte string is hashed with FNV-1a (64-bit) and the digest
/// is passed through the SplitMix64 finalizer. The result depends only on the
/// byte values, so it is identical on every platform.
///
/// derive_subseed(0, "") == 0x813F0174A2367C13 (pinned in the unit tests).
std::uint64_t derive_subseed(std::uint64_t seed, std::string_view label) noexcept;

/// Counter-based generator: the n-th output is mix64(key + (n + 1) * gamma),
/// i.e. SplitMix64 addressed by an explicit counter. Every stream is fully
/// determined by its key, so workers never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Uniform integer in [lo, hi] (inclusive).
  int uniform_int(int lo, int hi) noexcept {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Standard normal variate (Box-Muller, second value cached).
  double normal() noexcept;

  /// Poisson variate. Knuth multiplication below mean 30, PTRS above.
  std::uint64_t poisson(double mean) noexcept;

  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace spaug
