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

#include "spaug/retrieval/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spaug/common/error.hpp"

namespace spaug {

Embedding average_pool(const FeatureSet& fs, std::uint64_t id) {
  if (fs.features.empty()) fail(ErrorCode::kEmptyFeature, "cannot pool an empty feature set");
  const auto dim = fs.features.front().size();
  std::vector<double> sum(dim, 0.0);
  for (std::size_t n = 0; n < fs.features.size(); ++n) {
    const auto& f = fs.features[n];
    if (f.size() != dim) {
      fail(ErrorCode::kShape, "feature " + std::to_string(n) + " has dimension " +
                                  std::to_string(f.size()) + ", expected " + std::to_string(dim));
    }
    for (std::size_t d = 0; d < dim; ++d) sum[d] += f[d];
  }
  Embedding e;
  e.id = id;
  e.values.resize(dim);
  const double count = static_cast<double>(fs.features.size());
  for (std::size_t d = 0; d < dim; ++d) e.values[d] = static_cast<float>(sum[d] / count);
  return e;
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::kShape, "embedding dimensions differ: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0.0 || nb == 0.0) fail(ErrorCode::kDegenerateEmbedding, "zero-norm embedding");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
  try {
    return cosine_similarity(std::span<const float>(a.values), std::span<const float>(b.values));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateEmbedding) throw;
    const auto& bad = [&]() -> const Embedding& {
      for (float v : a.values) {
        if (v != 0.0f) return b;
      }
      return a;
    }();
    fail(ErrorCode::kDegenerateEmbedding, "embedding " + std::to_string(bad.id) + " has zero norm");
  }
}

}  // namespace spaug
