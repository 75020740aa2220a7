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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "expect_error.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/retrieval/embedding.hpp"
#include "spaug/retrieval/embedding_io.hpp"
#include "spaug/retrieval/evaluate.hpp"
#include "spaug/retrieval/recall.hpp"
#include "spaug/retrieval/similarity.hpp"
#include "synthetic.hpp"

namespace spaug {
namespace {

std::vector<Embedding> random_embeddings(std::size_t n, std::size_t dim, std::uint64_t seed,
                                         std::uint64_t first_id = 0) {
  Rng rng(seed);
  std::vector<Embedding> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].id = first_id + i;
    out[i].values.resize(dim);
    for (auto& v : out[i].values) v = static_cast<float>(rng.normal());
  }
  return out;
}

TEST(AveragePool, Basics) {
  EXPECT_EQ(average_pool({{{1.5f, -2.0f}}}, 4).values, (std::vector<float>{1.5f, -2.0f}));
  EXPECT_EQ(average_pool({{{1, 0, 0}, {0, 1, 0}}}).values, (std::vector<float>{0.5f, 0.5f, 0.0f}));
  EXPECT_EQ(average_pool({{{1, 0, 0}}}, 4).id, 4u);
  EXPECT_SPAUG_ERROR(average_pool({}), ErrorCode::kEmptyFeature);
  EXPECT_SPAUG_ERROR(average_pool({{{1, 2}, {1}}}), ErrorCode::kShape);
}

TEST(AveragePool, MatchesScalarLoop) {
  Rng rng(11);
  FeatureSet fs;
  for (int i = 0; i < 64; ++i) {
    std::vector<float> v(256);
    for (auto& x : v) x = static_cast<float>(rng.normal());
    fs.features.push_back(v);
  }
  const auto e = average_pool(fs);
  for (std::size_t d = 0; d < 256; ++d) {
    double s = 0.0;
    for (const auto& f : fs.features) s += f[d];
    EXPECT_NEAR(e.values[d], s / 64.0, 1e-6);
  }
}

TEST(Cosine, Values) {
  const Embedding a{0, {1, 2, 2}}, b{0, {2, 1, 2}};
  EXPECT_NEAR(cosine_similarity(a, b), 8.0 / 9.0, 1e-12);
  EXPECT_EQ(cosine_similarity(Embedding{0, {1, 0}}, Embedding{0, {0, 1}}), 0.0);
  for (const auto& v : random_embeddings(20, 7, 3)) {
    EXPECT_NEAR(cosine_similarity(v, v), 1.0, 1e-12);
    EXPECT_LE(cosine_similarity(v, v), 1.0);
  }
  EXPECT_SPAUG_ERROR(cosine_similarity(Embedding{0, {0, 0, 0}}, b), ErrorCode::kDegenerateEmbedding);
  EXPECT_SPAUG_ERROR(cosine_similarity(a, Embedding{0, {1, 2}}), ErrorCode::kShape);
}

TEST(SimilarityMatrix, MatchesScalarOracleForAnyWorkerCount) {
  const auto imgs = random_embeddings(50, 32, 1);
  const auto caps = random_embeddings(250, 32, 2, 1000);
  const auto m1 = similarity_matrix(imgs, caps, 1);
  ASSERT_EQ(m1.rows(), 50u);
  ASSERT_EQ(m1.cols(), 250u);
  EXPECT_EQ(m1.row_ids().front(), 0u);
  EXPECT_EQ(m1.col_ids().front(), 1000u);
  for (std::size_t i = 0; i < 50; ++i) {
    for (std::size_t j = 0; j < 250; ++j) {
      double dot = 0, na = 0, nb = 0;
      for (std::size_t d = 0; d < 32; ++d) {
        dot += double(imgs[i].values[d]) * caps[j].values[d];
        na += double(imgs[i].values[d]) * imgs[i].values[d];
        nb += double(caps[j].values[d]) * caps[j].values[d];
      }
      ASSERT_NEAR(m1.at(i, j), dot / std::sqrt(na * nb), 1e-6);
    }
  }
  const auto m4 = similarity_matrix(imgs, caps, 4);
  EXPECT_TRUE(std::ranges::equal(m1.values(), m4.values()));
}

TEST(SimilarityMatrix, ScaleInvarianceAndErrors) {
  auto imgs = random_embeddings(5, 8, 4);
  const auto caps = random_embeddings(25, 8, 5);
  const auto base = similarity_matrix(imgs, caps);
  for (auto& v : imgs[2].values) v *= 4.0f;
  for (auto& v : imgs[3].values) v *= 0.5f;
  EXPECT_TRUE(std::ranges::equal(base.values(), similarity_matrix(imgs, caps).values()));
  imgs[1].values.assign(8, 0.0f);
  imgs[1].id = 777;
  try {
    similarity_matrix(imgs, caps);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateEmbedding);
    EXPECT_NE(std::string(e.what()).find("777"), std::string::npos) << e.what();
  }
  const std::vector<Embedding> one{{0, {1, 1}}};
  const auto m = similarity_matrix(one, one);
  EXPECT_NEAR(m.at(0, 0), 1.0, 1e-12);
}

// Exhaustive oracle: sort candidates (stable by index) and look for ground truth.
double oracle_recall(const SimilarityMatrix& sim, std::size_t per, std::size_t k, Direction dir) {
  const bool i2t = dir == Direction::kImageToText;
  const auto queries = i2t ? sim.rows() : sim.cols();
  const auto cands = i2t ? sim.cols() : sim.rows();
  std::size_t hit = 0;
  for (std::size_t q = 0; q < queries; ++q) {
    std::vector<std::size_t> order(cands);
    std::iota(order.begin(), order.end(), 0);
    auto score = [&](std::size_t c) { return i2t ? sim.at(q, c) : sim.at(c, q); };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return score(a) > score(b); });
    for (std::size_t r = 0; r < k; ++r) {
      const bool gt = i2t ? order[r] / per == q : order[r] == q / per;
      if (gt) {
        ++hit;
        break;
      }
    }
  }
  return 100.0 * static_cast<double>(hit) / static_cast<double>(queries);
}

TEST(Recall, RankOfBreaksTiesByIndex) {
  const std::vector<double> s{0.5, 0.9, 0.5, 0.1};
  EXPECT_EQ(rank_of(s, 1), 0u);
  EXPECT_EQ(rank_of(s, 0), 1u);
  EXPECT_EQ(rank_of(s, 2), 2u);
  EXPECT_EQ(rank_of(s, 3), 3u);
}

TEST(Recall, HandBuiltAdversarialMatrix) {
  // Image 0 ranks its captions 5th..9th behind image 1's; image 1 has a tie
  // at rank 0 with a lower-index foreign caption.
  std::vector<double> v(2 * 10);
  for (int j = 0; j < 10; ++j) v[j] = j < 5 ? 0.1 : 0.9;
  for (int j = 0; j < 10; ++j) v[10 + j] = j == 0 ? 0.8 : (j >= 5 ? 0.8 : 0.0);
  const SimilarityMatrix sim(2, 10, v);
  const auto gt = GroundTruth::positional(2);
  EXPECT_EQ(recall_at_k(sim, gt, 1, Direction::kImageToText), 0.0);
  EXPECT_EQ(recall_at_k(sim, gt, 5, Direction::kImageToText), 50.0);
  EXPECT_EQ(recall_at_k(sim, gt, 6, Direction::kImageToText), 100.0);
  for (std::size_t k : {1u, 2u}) {
    EXPECT_EQ(recall_at_k(sim, gt, k, Direction::kTextToImage),
              oracle_recall(sim, 5, k, Direction::kTextToImage));
  }
  EXPECT_SPAUG_ERROR(recall_at_k(sim, gt, 0, Direction::kImageToText), ErrorCode::kProtocol);
  EXPECT_SPAUG_ERROR(recall_at_k(sim, gt, 11, Direction::kImageToText), ErrorCode::kProtocol);
  EXPECT_SPAUG_ERROR(recall_at_k(sim, gt, 3, Direction::kTextToImage), ErrorCode::kProtocol);
}

TEST(Recall, MatchesSortOracleOnRandomInstances) {
  Rng rng(99);
  for (int inst = 0; inst < 60; ++inst) {
    const std::size_t n = 2 + rng.below(30);
    std::vector<double> v(n * 5 * n);
    for (auto& x : v) x = inst % 3 == 0 ? std::round(rng.uniform() * 4) / 4 : rng.uniform() * 2 - 1;
    const SimilarityMatrix sim(n, 5 * n, v);
    const auto gt = GroundTruth::positional(n);
    double prev_i = 0, prev_t = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto ri = recall_at_k(sim, gt, k, Direction::kImageToText);
      const auto rt = recall_at_k(sim, gt, k, Direction::kTextToImage);
      ASSERT_EQ(ri, oracle_recall(sim, 5, k, Direction::kImageToText)) << inst << " " << k;
      ASSERT_EQ(rt, oracle_recall(sim, 5, k, Direction::kTextToImage)) << inst << " " << k;
      EXPECT_GE(ri, prev_i);
      EXPECT_GE(rt, prev_t);
      prev_i = ri;
      prev_t = rt;
    }
  }
}

TEST(Recall, IdentityAndNegatedCases) {
  const std::size_t n = 8;
  std::vector<Embedding> imgs, caps;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<float> e(n, 0.0f);
    e[i] = 1.0f;
    imgs.push_back({i, e});
    for (int j = 0; j < 5; ++j) caps.push_back({i * 5 + j, e});
  }
  const auto r = evaluate_single(imgs, caps);
  EXPECT_EQ(r.i2t, (DirectionRecall{100, 100, 100}));
  EXPECT_EQ(r.t2i, (DirectionRecall{100, 100, 100}));
  EXPECT_EQ(r.rsum, 600.0);

  const auto sim = similarity_matrix(imgs, caps);
  std::vector<double> neg(sim.values().begin(), sim.values().end());
  for (auto& x : neg) x = -x;
  const SimilarityMatrix nsim(n, 5 * n, neg);
  EXPECT_EQ(recall_at_k(nsim, GroundTruth::positional(n), 1, Direction::kImageToText), 0.0);
  EXPECT_EQ(recall_at_k(nsim, GroundTruth::positional(n), 1, Direction::kImageToText),
            oracle_recall(nsim, 5, 1, Direction::kImageToText));
}

TEST(Recall, BestRanksAndGroundTruthValidation) {
  const SimilarityMatrix one(1, 5, {0.1, 0.5, 0.3, 0.5, 0.2});
  const auto g = GroundTruth::positional(1);
  EXPECT_EQ(best_ranks(one, g, Direction::kImageToText), (std::vector<std::size_t>{0}));
  EXPECT_EQ(best_ranks(one, g, Direction::kTextToImage), (std::vector<std::size_t>(5, 0)));
  const SimilarityMatrix two(2, 5, std::vector<double>(10, 0.0));
  EXPECT_SPAUG_ERROR(g.validate(two), ErrorCode::kProtocol);
  GroundTruth orphan;
  orphan.image_to_captions = {{0, 1, 2, 3}};
  orphan.caption_to_image = {0, 0, 0, 0, 0};
  EXPECT_SPAUG_ERROR(orphan.validate(one), ErrorCode::kProtocol);
}

TEST(Rsum, Values) {
  EXPECT_NEAR(rsum(66.3, 88.7, 93.6, 50.6, 78.7, 86.7), 464.6, 1e-9);
  EXPECT_NEAR(rsum(71.9, 94.7, 98.8, 59.3, 89.5, 96.3), 510.5, 1e-9);
  EXPECT_EQ(rsum(0, 0, 0, 0, 0, 0), 0.0);
  EXPECT_EQ(rsum({1, 2, 3}, {4, 5, 6}), 21.0);
}

// Images of one fold share a direction; captions are noisy copies.
void fold_data(std::size_t images, std::vector<Embedding>& imgs, std::vector<Embedding>& caps,
               double noise, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t dim = 24;
  for (std::size_t i = 0; i < images; ++i) {
    std::vector<float> e(dim);
    for (auto& x : e) x = static_cast<float>(rng.normal());
    imgs.push_back({i, e});
    for (int j = 0; j < 5; ++j) {
      auto c = e;
      for (auto& x : c) x += static_cast<float>(noise * rng.normal());
      caps.push_back({i * 5 + j, c});
    }
  }
}

TEST(Evaluate, Coco1kAveragesIndependentFolds) {
  std::vector<Embedding> imgs, caps;
  fold_data(5000, imgs, caps, 1.5, 17);
  const auto report = evaluate(imgs, caps, Protocol::kCoco1k, {5, 2});
  ASSERT_EQ(report.per_fold.size(), 5u);
  EXPECT_EQ(report.folds, 5u);
  EXPECT_EQ(report.images, 1000u);
  EXPECT_EQ(report.captions, 5000u);
  DirectionRecall i2t, t2i;
  for (std::size_t f = 0; f < 5; ++f) {
    const std::span<const Embedding> fi(imgs.data() + f * 1000, 1000);
    const std::span<const Embedding> fc(caps.data() + f * 5000, 5000);
    const auto sim = similarity_matrix(fi, fc);
    const double r[6] = {oracle_recall(sim, 5, 1, Direction::kImageToText),
                         oracle_recall(sim, 5, 5, Direction::kImageToText),
                         oracle_recall(sim, 5, 10, Direction::kImageToText),
                         oracle_recall(sim, 5, 1, Direction::kTextToImage),
                         oracle_recall(sim, 5, 5, Direction::kTextToImage),
                         oracle_recall(sim, 5, 10, Direction::kTextToImage)};
    EXPECT_EQ(report.per_fold[f].i2t, (DirectionRecall{r[0], r[1], r[2]}));
    i2t.r1 += r[0] / 5; i2t.r5 += r[1] / 5; i2t.r10 += r[2] / 5;
    t2i.r1 += r[3] / 5; t2i.r5 += r[4] / 5; t2i.r10 += r[5] / 5;
  }
  EXPECT_NEAR(report.i2t.r1, i2t.r1, 1e-9);
  EXPECT_NEAR(report.i2t.r10, i2t.r10, 1e-9);
  EXPECT_NEAR(report.t2i.r5, t2i.r5, 1e-9);
  EXPECT_NEAR(report.rsum, rsum(report.i2t, report.t2i), 1e-9);
  EXPECT_LE(report.i2t.r1, report.i2t.r5);
  EXPECT_LE(report.t2i.r5, report.t2i.r10);
}

TEST(Evaluate, ProtocolErrors) {
  std::vector<Embedding> imgs, caps;
  fold_data(20, imgs, caps, 0.0, 1);
  const auto r = evaluate(imgs, caps, Protocol::kFlickr30k);
  EXPECT_EQ(r.i2t.r10, 100.0);
  EXPECT_EQ(r.t2i.r10, 100.0);
  caps.pop_back();
  try {
    evaluate(imgs, caps, Protocol::kFlickr30k);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProtocol);
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("99"), std::string::npos) << e.what();
  }
  caps.push_back(caps.back());
  EXPECT_SPAUG_ERROR(evaluate(imgs, caps, Protocol::kCoco1k), ErrorCode::kProtocol);
  EXPECT_EQ(protocol_from_string("coco1k"), Protocol::kCoco1k);
  EXPECT_SPAUG_ERROR(protocol_from_string("coco5k"), ErrorCode::kInvalidArgument);
}

TEST(Evaluate, ReportsAreDeterministic) {
  std::vector<Embedding> imgs, caps;
  fold_data(40, imgs, caps, 1.0, 5);
  const auto a = report_to_json(evaluate(imgs, caps, Protocol::kFlickr30k, {1, 1}));
  const auto b = report_to_json(evaluate(imgs, caps, Protocol::kFlickr30k, {1, 3}));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  const double sum = j["i2t"]["r1"].get<double>() + j["i2t"]["r5"].get<double>() +
                     j["i2t"]["r10"].get<double>() + j["t2i"]["r1"].get<double>() +
                     j["t2i"]["r5"].get<double>() + j["t2i"]["r10"].get<double>();
  EXPECT_NEAR(j["rsum"].get<double>(), sum, 1e-9);
  EXPECT_FALSE(report_to_text(evaluate(imgs, caps, Protocol::kFlickr30k)).empty());
}

void put_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(v & 0xFF);
  b.push_back(v >> 8);
}
void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xFF);
}
void put_u64(std::vector<std::uint8_t>& b, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back((v >> (8 * i)) & 0xFF);
}

TEST(EmbeddingIo, ByteLayout) {
  const std::vector<Embedding> e{{7, {1.0f, -2.5f}}, {0xFFFFFFFFFFull, {0.0f, 3.0f}}};
  std::vector<std::uint8_t> expected = {'V', 'S', 'E', 'B'};
  put_u16(expected, 1);
  put_u32(expected, 2);
  put_u32(expected, 2);
  for (const auto& x : e) {
    put_u64(expected, x.id);
    for (float f : x.values) put_u32(expected, std::bit_cast<std::uint32_t>(f));
  }
  EXPECT_EQ(encode_embeddings(e), expected);
  EXPECT_EQ(decode_embeddings(expected), e);
}

TEST(EmbeddingIo, RoundTripAndErrors) {
  const auto e = random_embeddings(100, 17, 8, 500);
  const auto dir = testing::fresh_dir("vseb");
  save_embeddings(dir / "e.vseb", e);
  const auto back = load_embeddings(dir / "e.vseb");
  ASSERT_EQ(back.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_EQ(back[i].id, e[i].id);
    EXPECT_EQ(std::memcmp(back[i].values.data(), e[i].values.data(), 17 * sizeof(float)), 0);
  }
  auto bytes = encode_embeddings(e);
  for (std::size_t cut : {std::size_t{3}, std::size_t{10}, std::size_t{14}, bytes.size() - 1}) {
    EXPECT_SPAUG_ERROR(decode_embeddings(std::span(bytes).first(cut)), ErrorCode::kTruncated);
  }
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_SPAUG_ERROR(decode_embeddings(trailing), ErrorCode::kFormat);
  auto magic = bytes;
  magic[0] = 'X';
  EXPECT_SPAUG_ERROR(decode_embeddings(magic), ErrorCode::kFormat);
  auto version = bytes;
  version[4] = 2;
  EXPECT_SPAUG_ERROR(decode_embeddings(version), ErrorCode::kFormat);
  auto nan = encode_embeddings(std::vector<Embedding>{{1, {std::numeric_limits<float>::quiet_NaN()}}});
  EXPECT_SPAUG_ERROR(decode_embeddings(nan), ErrorCode::kFormat);
  EXPECT_SPAUG_ERROR(encode_embeddings(std::vector<Embedding>{{1, {1, 2}}, {2, {1}}}), ErrorCode::kShape);

  std::vector<std::uint8_t> empty = {'V', 'S', 'E', 'B'};
  put_u16(empty, 1);
  put_u32(empty, 0);
  put_u32(empty, 16);
  EXPECT_TRUE(decode_embeddings(empty).empty());
  EXPECT_SPAUG_ERROR(load_embeddings(dir / "missing.vseb"), ErrorCode::kIo);
}

}  // namespace
}  // namespace spaug
