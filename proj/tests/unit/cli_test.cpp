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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spaug/common/seed.hpp"
#include "spaug/dataset/manifest.hpp"
#include "spaug/imgcorrupt/image_io.hpp"
#include "spaug/retrieval/embedding_io.hpp"
#include "synthetic.hpp"

namespace spaug {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run spaug_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto err_file = fs::temp_directory_path() / ("spaug_cli_err_" + std::to_string(counter++));
  const auto cmd = env + " '" + std::string(SPAUG_CLI_PATH) + "' " + args + " 2>'" +
                   err_file.string() + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  fs::remove(err_file);
  return r;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

TEST(Cli, ImgCorruptWritesImageAndProvenance) {
  const auto dir = testing::fresh_dir("cli_img");
  write_png(testing::synthetic_image(0, 64), dir / "a.png");
  const auto args = "--seed 1 img corrupt --in " + q(dir / "a.png") +
                    " --kind pixelate --severity 3 --out " + q(dir / "b.png");
  const auto r = spaug_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(dir / "b.png"));
  const auto prov = nlohmann::json::parse(slurp(dir / "b.png.prov.json"));
  EXPECT_EQ(prov["seed"], 1);
  EXPECT_EQ(prov["kind"], "pixelate");
  EXPECT_EQ(prov["severity"], 3);
  EXPECT_TRUE(prov.contains("version"));
  const auto first = read_file_bytes(dir / "b.png");
  ASSERT_EQ(spaug_cli(args).code, 0);
  EXPECT_EQ(read_file_bytes(dir / "b.png"), first);
}

TEST(Cli, ImgCorruptErrors) {
  const auto dir = testing::fresh_dir("cli_img_err");
  write_png(testing::synthetic_image(0, 32), dir / "a.png");
  const auto bad_kind = spaug_cli("--seed 1 img corrupt --in " + q(dir / "a.png") +
                                  " --kind fooblur --out " + q(dir / "b.png"));
  EXPECT_EQ(bad_kind.code, 2);
  EXPECT_NE(bad_kind.err.find("zoom+snow"), std::string::npos) << bad_kind.err;
  EXPECT_NE(bad_kind.err.find("gaussian_noise"), std::string::npos);
  const auto missing = spaug_cli("--seed 1 img corrupt --in " + q(dir / "none.png") +
                                 " --kind fog --out " + q(dir / "b.png"));
  EXPECT_EQ(missing.code, 1) << missing.err;
  EXPECT_EQ(spaug_cli("--seed 1 img corrupt --in " + q(dir / "a.png") +
                      " --kind fog --severity 9 --out " + q(dir / "b.png"))
                .code,
            2);
  EXPECT_EQ(spaug_cli("").code, 2);
}

TEST(Cli, TextAugment) {
  const auto r = spaug_cli(
      "--seed 3 --format text text augment --kind article_removal --text "
      "'A male is wearing an orange hat and glasses.'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Male is wearing orange hat and glasses.\n");

  const auto noop = spaug_cli("--seed 3 text augment --kind be_verb_error --text 'Dogs run fast.'");
  ASSERT_EQ(noop.code, 0) << noop.err;
  const auto j = nlohmann::json::parse(noop.out);
  EXPECT_EQ(j["output"], "Dogs run fast.");
  EXPECT_FALSE(j["changed"].get<bool>());
  EXPECT_TRUE(j.contains("note"));
}

TEST(Cli, TextAugmentBatchIsReproducible) {
  const auto dir = testing::fresh_dir("cli_text");
  {
    std::ofstream f(dir / "in.txt");
    for (int i = 0; i < 100; ++i) f << testing::synthetic_captions(i)[i % 5] << "\n";
  }
  for (const char* name : {"a", "b"}) {
    const auto r = spaug_cli("--seed 8 text augment --kind synonym_replacement --input " +
                             q(dir / "in.txt") + " --out " + q(dir / name));
    ASSERT_EQ(r.code, 0) << r.err;
  }
  const auto audit = slurp(dir / "a.audit.jsonl");
  EXPECT_EQ(std::count(audit.begin(), audit.end(), '\n'), 100);
  EXPECT_EQ(audit, slurp(dir / "b.audit.jsonl"));
  EXPECT_EQ(slurp(dir / "a"), slurp(dir / "b"));
}

TEST(Cli, UnreachableTranslatorExitsThree) {
  const auto r = spaug_cli(
      "--seed 1 --translator real text augment --kind back_translation --text 'A dog runs.'",
      "SPAUG_TRANSLATOR_URL=http://127.0.0.1:1/translate");
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.err.find("retry"), std::string::npos) << r.err;
}

TEST(Cli, RandomSeedIsRecorded) {
  const auto r = spaug_cli("policy sample --count 3");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("choice"));
    ++n;
  }
  EXPECT_EQ(n, 3);
  EXPECT_NE(r.err.find("seed"), std::string::npos) << r.err;
}

TEST(Cli, PolicySampleHistogram) {
  const auto dir = testing::fresh_dir("cli_policy");
  const auto r = spaug_cli("--seed 5 policy sample --count 2000 --modality text --out " +
                           q(dir / "d.jsonl"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_EQ(summary["draws"], 2000);
  std::size_t total = 0;
  for (const auto& [k, v] : summary["histogram"].items()) total += v.get<std::size_t>();
  EXPECT_EQ(total, 2000u);
  EXPECT_EQ(summary["histogram"].size(), 7u);
}

TEST(Cli, ApplyPolicy) {
  const auto dir = testing::fresh_dir("cli_apply");
  testing::write_synthetic_dataset(dir / "data", 6, 32, "train");
  const auto args = "--seed 4 --workers 2 apply-policy --manifest " +
                    q(dir / "data" / "manifest.jsonl") + " --out-dir " + q(dir / "out");
  const auto r = spaug_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = load_manifest(dir / "out" / "manifest.jsonl");
  EXPECT_EQ(m.items.size(), 6u);
  const auto audit = slurp(dir / "out" / "audit.jsonl");
  EXPECT_EQ(std::count(audit.begin(), audit.end(), '\n'), 6 * 6);
  const auto prov = nlohmann::json::parse(slurp(dir / "out" / "provenance.json"));
  EXPECT_EQ(prov["seed"], 4);
  ASSERT_EQ(spaug_cli(args).code, 0);
  EXPECT_EQ(slurp(dir / "out" / "audit.jsonl"), audit);
}

TEST(Cli, GenTestsets) {
  const auto dir = testing::fresh_dir("cli_gen");
  testing::write_synthetic_dataset(dir / "data", 3, 32);
  const auto args = "--seed 2 --workers 2 gen-testsets --manifest " +
                    q(dir / "data" / "manifest.jsonl") + " --out-dir " + q(dir / "suite");
  const auto r = spaug_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_EQ(summary["image_variants"], 28);
  EXPECT_EQ(summary["text_variants"], 6);
  EXPECT_EQ(summary["severity"], 3);
  const auto again = spaug_cli("--format text " + args);
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_NE(again.out.find("up-to-date, 0 files rewritten"), std::string::npos) << again.out;
  EXPECT_EQ(spaug_cli(args + " --severity 6").code, 2);
  EXPECT_EQ(spaug_cli("--seed 2 gen-testsets --manifest " + q(dir / "absent.jsonl") +
                      " --out-dir " + q(dir / "x"))
                .code,
            2);  // a non-existent file is rejected during argument parsing
}

void write_embeddings(const fs::path& dir, std::size_t images, double noise) {
  Rng rng(7);
  std::vector<Embedding> imgs, caps;
  for (std::size_t i = 0; i < images; ++i) {
    std::vector<float> e(16);
    for (auto& x : e) x = static_cast<float>(rng.normal());
    imgs.push_back({i, e});
    for (int j = 0; j < 5; ++j) {
      auto c = e;
      for (auto& x : c) x += static_cast<float>(noise * rng.normal());
      caps.push_back({i * 5 + j, c});
    }
  }
  save_embeddings(dir / "img.vseb", imgs);
  save_embeddings(dir / "txt.vseb", caps);
}

TEST(Cli, Eval) {
  const auto dir = testing::fresh_dir("cli_eval");
  write_embeddings(dir, 30, 0.0);
  const auto base = "eval --img-emb " + q(dir / "img.vseb") + " --txt-emb " + q(dir / "txt.vseb");
  const auto r = spaug_cli(base + " --protocol flickr30k --out " + q(dir / "r.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rsum"], 600.0);
  EXPECT_EQ(j["i2t"]["r1"], 100.0);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir / "r.json")), j);
  const auto coco = spaug_cli(base + " --protocol coco1k");
  EXPECT_EQ(coco.code, 2);
  EXPECT_NE(coco.err.find("5000"), std::string::npos) << coco.err;
}

TEST(Cli, EvalCoco1kNeedsFiveThousandImages) {
  const auto dir = testing::fresh_dir("cli_eval_coco");
  write_embeddings(dir, 4999, 0.5);
  const auto r = spaug_cli("eval --img-emb " + q(dir / "img.vseb") + " --txt-emb " +
                           q(dir / "txt.vseb") + " --protocol coco1k");
  EXPECT_EQ(r.code, 2) << r.err;
}

}  // namespace
}  // namespace spaug
