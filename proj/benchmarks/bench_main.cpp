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

#include <benchmark/benchmark.h>

#include <vector>

#include "spaug/augpolicy/policy.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/imgcorrupt/corrupt.hpp"
#include "spaug/imgcorrupt/image_io.hpp"
#include "spaug/retrieval/evaluate.hpp"
#include "spaug/textaug/augment.hpp"
#include "spaug/textaug/tokenizer.hpp"

namespace {

spaug::Image gradient(int side) {
  spaug::Image img(side, side);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      img.at(y, x, 0) = static_cast<float>(x) / side;
      img.at(y, x, 1) = static_cast<float>(y) / side;
      img.at(y, x, 2) = 0.5f * static_cast<float>(x + y) / side;
    }
  }
  return img;
}

// One benchmark per corruption kind at severity 3 on a 256x256 image.
void BM_Corrupt(benchmark::State& state) {
  const auto kind = spaug::all_corruption_kinds()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(spaug::to_string(kind)));
  const auto img = gradient(256);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spaug::corrupt(img, {kind, 3, seed++}));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Corrupt)->DenseRange(0, spaug::kCorruptionKindCount - 1)->Unit(benchmark::kMillisecond);

void BM_EncodePng(benchmark::State& state) {
  const auto img = gradient(256);
  for (auto _ : state) benchmark::DoNotOptimize(spaug::encode_png(img));
}
BENCHMARK(BM_EncodePng)->Unit(benchmark::kMillisecond);

void BM_TextAugment(benchmark::State& state) {
  const auto kind = spaug::text_aug_kinds()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(spaug::to_string(kind)));
  const auto seq = spaug::tokenize("A man on a ladder cleans the window of a tall building.",
                                   spaug::Lexicon::defaults());
  const spaug::TextAugConfig config;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(spaug::augment_text(seq, kind, seed++, config));
}
BENCHMARK(BM_TextAugment)->DenseRange(0, spaug::kTextAugKindCount - 1);

void BM_PolicyDecision(benchmark::State& state) {
  const spaug::PolicyConfig config;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(spaug::sample_image_aug(seed++, config));
}
BENCHMARK(BM_PolicyDecision);

// Flickr-sized evaluation: n images, 5n captions.
void BM_Evaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  spaug::Rng rng(7);
  auto make = [&](std::size_t count) {
    std::vector<spaug::Embedding> out(count);
    for (std::size_t i = 0; i < count; ++i) {
      out[i].id = i;
      for (int d = 0; d < 256; ++d) out[i].values.push_back(static_cast<float>(rng.normal()));
    }
    return out;
  };
  const auto images = make(n);
  const auto captions = make(5 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spaug::evaluate(images, captions, spaug::Protocol::kFlickr30k));
  }
}
BENCHMARK(BM_Evaluate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
