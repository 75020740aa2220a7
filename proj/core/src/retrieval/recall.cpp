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

#include "spaug/retrieval/recall.hpp"

#include <algorithm>
#include <string>

#include "spaug/common/error.hpp"

namespace spaug {

GroundTruth GroundTruth::positional(std::size_t images, std::size_t per_image) {
  GroundTruth gt;
  gt.image_to_captions.resize(images);
  gt.caption_to_image.resize(images * per_image);
  for (std::size_t i = 0; i < images; ++i) {
    for (std::size_t j = 0; j < per_image; ++j) {
      gt.image_to_captions[i].push_back(i * per_image + j);
      gt.caption_to_image[i * per_image + j] = i;
    }
  }
  return gt;
}

void GroundTruth::validate(const SimilarityMatrix& sim) const {
  if (image_to_captions.size() != sim.rows() || caption_to_image.size() != sim.cols()) {
    fail(ErrorCode::kProtocol, "ground truth covers " + std::to_string(image_to_captions.size()) +
                                   " images x " + std::to_string(caption_to_image.size()) +
                                   " captions, matrix is " + std::to_string(sim.rows()) + " x " +
                                   std::to_string(sim.cols()));
  }
  std::vector<bool> listed(caption_to_image.size(), false);
  for (std::size_t i = 0; i < image_to_captions.size(); ++i) {
    if (image_to_captions[i].empty()) {
      fail(ErrorCode::kProtocol, "image " + std::to_string(i) + " has no ground-truth caption");
    }
    for (auto t : image_to_captions[i]) {
      if (t >= caption_to_image.size() || caption_to_image[t] != i) {
        fail(ErrorCode::kProtocol, "ground-truth maps disagree at image " + std::to_string(i));
      }
      if (listed[t]) fail(ErrorCode::kProtocol, "caption " + std::to_string(t) + " listed twice");
      listed[t] = true;
    }
  }
  for (std::size_t t = 0; t < caption_to_image.size(); ++t) {
    if (!listed[t]) {
      fail(ErrorCode::kProtocol,
           "caption " + std::to_string(t) + " is missing from its image's ground truth");
    }
  }
}

std::size_t rank_of(std::span<const double> scores, std::size_t target) noexcept {
  const double s = scores[target];
  std::size_t rank = 0;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] > s || (scores[c] == s && c < target)) ++rank;
  }
  return rank;
}

std::vector<std::size_t> best_ranks(const SimilarityMatrix& sim, const GroundTruth& gt,
                                    Direction direction) {
  gt.validate(sim);
  std::vector<std::size_t> out;
  if (direction == Direction::kImageToText) {
    out.reserve(sim.rows());
    for (std::size_t i = 0; i < sim.rows(); ++i) {
      const auto row = sim.row(i);
      std::size_t best = sim.cols();
      for (auto t : gt.image_to_captions[i]) best = std::min(best, rank_of(row, t));
      out.push_back(best);
    }
  } else {
    std::vector<double> column(sim.rows());
    out.reserve(sim.cols());
    for (std::size_t t = 0; t < sim.cols(); ++t) {
      for (std::size_t i = 0; i < sim.rows(); ++i) column[i] = sim.at(i, t);
      out.push_back(rank_of(column, gt.caption_to_image[t]));
    }
  }
  return out;
}

double recall_at_k(const SimilarityMatrix& sim, const GroundTruth& gt, std::size_t k,
                   Direction direction) {
  const auto candidates = direction == Direction::kImageToText ? sim.cols() : sim.rows();
  if (k == 0 || k > candidates) {
    fail(ErrorCode::kProtocol, "k = " + std::to_string(k) + " is outside 1.." +
                                   std::to_string(candidates) + " candidates");
  }
  const auto ranks = best_ranks(sim, gt, direction);
  const auto hits = std::count_if(ranks.begin(), ranks.end(), [k](std::size_t r) { return r < k; });
  return 100.0 * static_cast<double>(hits) / static_cast<double>(ranks.size());
}

}  // namespace spaug
