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
#include <span>
#include <vector>

namespace spaug {

/// Per-element features of one image (grid cells / regions) or one caption
/// (word tokens). All vectors share one dimension.
struct FeatureSet {
  std::vector<std::vector<float>> features;
};

struct Embedding {
  std::uint64_t id = 0;
  std::vector<float> values;

  std::size_t dim() const noexcept { return values.size(); }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Component-wise mean (accumulated in double). Throws kEmptyFeature for an
/// empty set and kShape for ragged dimensions.
Embedding average_pool(const FeatureSet& fs, std::uint64_t id = 0);

/// Clamped to [-1, 1]. Throws kShape on a dimension mismatch and
/// kDegenerateEmbedding when either norm is zero.
double cosine_similarity(const Embedding& a, const Embedding& b);
double cosine_similarity(std::span<const float> a, std::span<const float> b);

}  // namespace spaug
