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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spaug/retrieval/embedding.hpp"
#include "spaug/retrieval/recall.hpp"

namespace spaug {

struct DirectionRecall {
  double r1 = 0.0;
  double r5 = 0.0;
  double r10 = 0.0;
  friend bool operator==(const DirectionRecall&, const DirectionRecall&) = default;
};

struct RetrievalReport {
  DirectionRecall i2t;
  DirectionRecall t2i;
  double rsum = 0.0;
  std::string protocol;
  std::size_t folds = 1;
  std::size_t images = 0;    // per fold
  std::size_t captions = 0;  // per fold
  std::vector<RetrievalReport> per_fold;  // coco1k only
};

enum class Protocol { kFlickr30k, kCoco1k };

Protocol protocol_from_string(std::string_view name);
std::string_view to_string(Protocol protocol) noexcept;

inline constexpr std::size_t kCocoFoldSize = 1000;

/// Sum of the six recalls.
double rsum(const DirectionRecall& i2t, const DirectionRecall& t2i) noexcept;
double rsum(double i2t_r1, double i2t_r5, double i2t_r10, double t2i_r1, double t2i_r5,
            double t2i_r10) noexcept;

/// Single pass with positional ground truth (captions 5i..5i+4 of image i).
RetrievalReport evaluate_single(std::span<const Embedding> images,
                                std::span<const Embedding> captions, unsigned workers = 1);

struct EvalOptions {
  std::size_t folds = 5;  // coco1k
  unsigned workers = 1;
};

/// flickr30k: one pass over every image. coco1k: the first folds x 1,000
/// images are split into consecutive folds, evaluated independently and the
/// recalls averaged arithmetically. Throws kProtocol when the caption count
/// is not 5x the image count or coco1k has too few images.
RetrievalReport evaluate(std::span<const Embedding> images, std::span<const Embedding> captions,
                         Protocol protocol, const EvalOptions& options = {});
RetrievalReport evaluate_files(const std::filesystem::path& image_embeddings,
                               const std::filesystem::path& caption_embeddings, Protocol protocol,
                               const EvalOptions& options = {});

/// Full-precision JSON.
std::string report_to_json(const RetrievalReport& report);
/// Human-readable table, one decimal.
std::string report_to_text(const RetrievalReport& report);

}  // namespace spaug
