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

#include "spaug/retrieval/embedding.hpp"

namespace spaug {

/// Rows are images, columns are captions; entries are cosine similarities.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                   std::vector<std::uint64_t> row_ids = {}, std::vector<std::uint64_t> col_ids = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t image, std::size_t caption) const noexcept {
    return values_[image * cols_ + caption];
  }
  std::span<const double> row(std::size_t image) const noexcept {
    return std::span<const double>(values_).subspan(image * cols_, cols_);
  }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::uint64_t>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::uint64_t>& col_ids() const noexcept { return col_ids_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::uint64_t> row_ids_;
  std::vector<std::uint64_t> col_ids_;
};

/// Full image x caption matrix, rows computed on `workers` threads. Output
/// does not depend on the worker count.
SimilarityMatrix similarity_matrix(std::span<const Embedding> images,
                                   std::span<const Embedding> captions, unsigned workers = 1);

}  // namespace spaug
