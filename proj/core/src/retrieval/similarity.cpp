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

#include "spaug/retrieval/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spaug/common/error.hpp"
#include "spaug/common/parallel.hpp"

namespace spaug {

SimilarityMatrix::SimilarityMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                                   std::vector<std::uint64_t> row_ids,
                                   std::vector<std::uint64_t> col_ids)
    : rows_(rows), cols_(cols), values_(std::move(values)), row_ids_(std::move(row_ids)),
      col_ids_(std::move(col_ids)) {
  if (values_.size() != rows_ * cols_) fail(ErrorCode::kShape, "similarity values do not match shape");
  if (row_ids_.empty()) {
    row_ids_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) row_ids_[i] = i;
  }
  if (col_ids_.empty()) {
    col_ids_.resize(cols_);
    for (std::size_t i = 0; i < cols_; ++i) col_ids_[i] = i;
  }
  if (row_ids_.size() != rows_ || col_ids_.size() != cols_) {
    fail(ErrorCode::kShape, "similarity id maps do not match shape");
  }
}

namespace {

std::vector<double> inverse_norms(std::span<const Embedding> set, std::size_t dim, const char* what) {
  std::vector<double> inv(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& e = set[i];
    if (e.dim() != dim) {
      fail(ErrorCode::kShape, std::string(what) + " embedding " + std::to_string(e.id) +
                                  " has dimension " + std::to_string(e.dim()) + ", expected " +
                                  std::to_string(dim));
    }
    double sq = 0.0;
    for (float v : e.values) sq += static_cast<double>(v) * v;
    if (sq == 0.0) {
      fail(ErrorCode::kDegenerateEmbedding,
           std::string(what) + " embedding " + std::to_string(e.id) + " has zero norm");
    }
    inv[i] = 1.0 / std::sqrt(sq);
  }
  return inv;
}

}  // namespace

SimilarityMatrix similarity_matrix(std::span<const Embedding> images,
                                   std::span<const Embedding> captions, unsigned workers) {
  if (images.empty() || captions.empty()) {
    fail(ErrorCode::kShape, "similarity matrix needs at least one image and one caption");
  }
  const auto dim = images.front().dim();
  const auto inv_i = inverse_norms(images, dim, "image");
  const auto inv_t = inverse_norms(captions, dim, "caption");
  const auto rows = images.size();
  const auto cols = captions.size();
  std::vector<double> values(rows * cols);
  parallel_for(rows, workers, [&](std::size_t i) {
    const auto& a = images[i].values;
    for (std::size_t t = 0; t < cols; ++t) {
      const auto& b = captions[t].values;
      double dot = 0.0;
      for (std::size_t d = 0; d < dim; ++d) dot += static_cast<double>(a[d]) * b[d];
      values[i * cols + t] = std::clamp(dot * inv_i[i] * inv_t[t], -1.0, 1.0);
    }
  });
  std::vector<std::uint64_t> row_ids(rows), col_ids(cols);
  for (std::size_t i = 0; i < rows; ++i) row_ids[i] = images[i].id;
  for (std::size_t t = 0; t < cols; ++t) col_ids[t] = captions[t].id;
  return SimilarityMatrix(rows, cols, std::move(values), std::move(row_ids), std::move(col_ids));
}

}  // namespace spaug
