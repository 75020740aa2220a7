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

#include "spaug/retrieval/evaluate.hpp"

#include <cstdio>

#include <json.hpp>

#include "spaug/common/error.hpp"
#include "spaug/retrieval/embedding_io.hpp"

namespace spaug {

Protocol protocol_from_string(std::string_view name) {
  if (name == "flickr30k") return Protocol::kFlickr30k;
  if (name == "coco1k") return Protocol::kCoco1k;
  fail(ErrorCode::kInvalidArgument,
       "unknown protocol '" + std::string(name) + "'; use flickr30k or coco1k");
}

std::string_view to_string(Protocol protocol) noexcept {
  return protocol == Protocol::kFlickr30k ? "flickr30k" : "coco1k";
}

double rsum(double a, double b, double c, double d, double e, double f) noexcept {
  return a + b + c + d + e + f;
}

double rsum(const DirectionRecall& i2t, const DirectionRecall& t2i) noexcept {
  return rsum(i2t.r1, i2t.r5, i2t.r10, t2i.r1, t2i.r5, t2i.r10);
}

namespace {

void check_counts(std::size_t images, std::size_t captions) {
  if (images == 0) fail(ErrorCode::kProtocol, "no image embeddings");
  if (captions != 5 * images) {
    fail(ErrorCode::kProtocol, "expected " + std::to_string(5 * images) + " caption embeddings for " +
                                   std::to_string(images) + " images, got " +
                                   std::to_string(captions));
  }
}

DirectionRecall recalls(const std::vector<std::size_t>& ranks) {
  auto pct = [&](std::size_t k) {
    std::size_t hits = 0;
    for (auto r : ranks) hits += r < k ? 1 : 0;
    return 100.0 * static_cast<double>(hits) / static_cast<double>(ranks.size());
  };
  return {pct(1), pct(5), pct(10)};
}

}  // namespace

RetrievalReport evaluate_single(std::span<const Embedding> images,
                                std::span<const Embedding> captions, unsigned workers) {
  check_counts(images.size(), captions.size());
  const auto sim = similarity_matrix(images, captions, workers);
  const auto gt = GroundTruth::positional(images.size());
  RetrievalReport r;
  // Ranks at or beyond the candidate count never count as hits, so small
  // collections simply saturate R@K instead of failing.
  r.i2t = recalls(best_ranks(sim, gt, Direction::kImageToText));
  r.t2i = recalls(best_ranks(sim, gt, Direction::kTextToImage));
  r.rsum = rsum(r.i2t, r.t2i);
  r.images = images.size();
  r.captions = captions.size();
  return r;
}

RetrievalReport evaluate(std::span<const Embedding> images, std::span<const Embedding> captions,
                         Protocol protocol, const EvalOptions& options) {
  check_counts(images.size(), captions.size());
  if (protocol == Protocol::kFlickr30k) {
    auto r = evaluate_single(images, captions, options.workers);
    r.protocol = "flickr30k";
    r.folds = 1;
    return r;
  }
  if (options.folds == 0) fail(ErrorCode::kProtocol, "coco1k needs at least one fold");
  const auto needed = options.folds * kCocoFoldSize;
  if (images.size() < needed) {
    fail(ErrorCode::kProtocol, "coco1k with " + std::to_string(options.folds) + " folds expects " +
                                   std::to_string(needed) + " images, got " +
                                   std::to_string(images.size()));
  }
  RetrievalReport avg;
  avg.protocol = "coco1k";
  avg.folds = options.folds;
  avg.images = kCocoFoldSize;
  avg.captions = 5 * kCocoFoldSize;
  for (std::size_t f = 0; f < options.folds; ++f) {
    auto fold = evaluate_single(images.subspan(f * kCocoFoldSize, kCocoFoldSize),
                                captions.subspan(5 * f * kCocoFoldSize, 5 * kCocoFoldSize),
                                options.workers);
    fold.protocol = "coco1k";
    avg.i2t.r1 += fold.i2t.r1;
    avg.i2t.r5 += fold.i2t.r5;
    avg.i2t.r10 += fold.i2t.r10;
    avg.t2i.r1 += fold.t2i.r1;
    avg.t2i.r5 += fold.t2i.r5;
    avg.t2i.r10 += fold.t2i.r10;
    avg.per_fold.push_back(std::move(fold));
  }
  const double n = static_cast<double>(options.folds);
  for (double* v : {&avg.i2t.r1, &avg.i2t.r5, &avg.i2t.r10, &avg.t2i.r1, &avg.t2i.r5, &avg.t2i.r10}) {
    *v /= n;
  }
  avg.rsum = rsum(avg.i2t, avg.t2i);
  return avg;
}

RetrievalReport evaluate_files(const std::filesystem::path& image_embeddings,
                               const std::filesystem::path& caption_embeddings, Protocol protocol,
                               const EvalOptions& options) {
  const auto images = load_embeddings(image_embeddings);
  const auto captions = load_embeddings(caption_embeddings);
  return evaluate(images, captions, protocol, options);
}

namespace {

nlohmann::json report_json(const RetrievalReport& r) {
  auto dir = [](const DirectionRecall& d) {
    return nlohmann::json{{"r1", d.r1}, {"r5", d.r5}, {"r10", d.r10}};
  };
  nlohmann::json j = {{"protocol", r.protocol}, {"folds", r.folds},   {"images", r.images},
                      {"captions", r.captions}, {"i2t", dir(r.i2t)}, {"t2i", dir(r.t2i)},
                      {"rsum", r.rsum}};
  if (!r.per_fold.empty()) {
    j["per_fold"] = nlohmann::json::array();
    for (const auto& f : r.per_fold) j["per_fold"].push_back(report_json(f));
  }
  return j;
}

}  // namespace

std::string report_to_json(const RetrievalReport& report) { return report_json(report).dump(2); }

std::string report_to_text(const RetrievalReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "protocol  %s (%zu fold%s, %zu images x %zu captions)\n"
                "i2t       R@1 %.1f  R@5 %.1f  R@10 %.1f\n"
                "t2i       R@1 %.1f  R@5 %.1f  R@10 %.1f\n"
                "rsum      %.1f\n",
                r.protocol.c_str(), r.folds, r.folds == 1 ? "" : "s", r.images, r.captions,
                r.i2t.r1, r.i2t.r5, r.i2t.r10, r.t2i.r1, r.t2i.r5, r.t2i.r10, r.rsum);
  return buf;
}

}  // namespace spaug
