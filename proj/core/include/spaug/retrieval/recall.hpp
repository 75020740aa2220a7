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

#include <cstddef>
#include <vector>

#include "spaug/retrieval/similarity.hpp"

namespace spaug {

enum class Direction { kImageToText, kTextToImage };

/// Which captions belong to which image (by matrix position).
struct GroundTruth {
  std::vector<std::vector<std::size_t>> image_to_captions;
  std::vector<std::size_t> caption_to_image;

  /// Captions per_image*i .. per_image*i + per_image-1 belong to image i.
  static GroundTruth positional(std::size_t images, std::size_t per_image = 5);
  /// Throws kProtocol unless it matches `sim` and every caption has one image.
  void validate(const SimilarityMatrix& sim) const;
};

/// 0-based rank of candidate `target` among `scores`: the number of candidates
/// scoring higher, plus those scoring equal at a lower index.
std::size_t rank_of(std::span<const double> scores, std::size_t target) noexcept;

/// Percentage of queries with a ground-truth candidate in the top k. Throws
/// kProtocol when k is 0 or exceeds the number of candidates.
double recall_at_k(const SimilarityMatrix& sim, const GroundTruth& gt, std::size_t k,
                   Direction direction);

/// Best (smallest) ground-truth rank of every query, in query order.
std::vector<std::size_t> best_ranks(const SimilarityMatrix& sim, const GroundTruth& gt,
                                    Direction direction);

}  // namespace spaug
