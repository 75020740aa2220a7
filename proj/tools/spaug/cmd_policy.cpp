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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "spaug/augpolicy/policy.hpp"
#include "spaug/common/error.hpp"
#include "spaug/common/parallel.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/dataset/manifest.hpp"
#include "spaug/dataset/test_suite.hpp"
#include "spaug/imgcorrupt/image_io.hpp"

namespace spaug::cli {

namespace fs = std::filesystem;

namespace {

struct SampleArgs {
  std::size_t count = 10;
  std::string modality = "image";
  std::string policy;
  std::string out;
};

struct ApplyArgs {
  std::string manifest;
  std::string out_dir;
  std::string image_root;
  std::string split = "train";
  std::string policy;
  int epoch = 0;
};

PolicyConfig load_policy(const std::string& path) {
  return path.empty() ? PolicyConfig{} : PolicyConfig::load(path);
}

int run_sample(RunConfig& config, const SampleArgs& args) {
  const auto policy = load_policy(args.policy);
  const bool image = args.modality == "image";
  std::map<std::string, std::size_t> histogram;
  std::ostringstream lines;
  for (std::size_t i = 0; i < args.count; ++i) {
    const auto seed = derive_subseed(config.seed(), "draw:" + std::to_string(i));
    const auto d = image ? sample_image_aug(seed, policy) : sample_text_aug(seed, policy);
    ++histogram[d.choice()];
    lines << audit_json(d, i, std::nullopt) << '\n';
  }
  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) fail(ErrorCode::kIo, "cannot write " + args.out);
    f << lines.str();
  }
  if (config.output_format() == OutputFormat::kText) {
    std::cout << args.count << " " << args.modality << " draws, seed " << config.seed() << '\n';
    for (const auto& [choice, n] : histogram) {
      std::cout << "  " << choice << ": " << n << '\n';
    }
  } else if (args.out.empty()) {
    std::cout << lines.str();
  } else {
    nlohmann::json summary = {{"draws", args.count}, {"modality", args.modality},
                              {"seed", config.seed()}, {"histogram", histogram},
                              {"audit", args.out}};
    std::cout << summary.dump(2) << '\n';
  }
  return 0;
}

int run_apply(RunConfig& config, const ApplyArgs& args) {
  ManifestLoadOptions load_opts;
  load_opts.image_root = args.image_root;
  Manifest manifest = load_manifest(args.manifest, load_opts);
  if (args.split != "all") {
    const auto split = parse_split(args.split);
    if (!split) fail(ErrorCode::kInvalidArgument, "--split must be train, val, test or all");
    manifest = manifest.restricted_to(*split);
  }
  PolicyContext ctx;
  ctx.config = load_policy(args.policy);
  ctx.severity_table = &config.severity_table();
  ctx.text = config.text_config();

  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir / "images");
  const auto n = manifest.items.size();
  std::vector<ManifestItem> items(n);
  std::vector<std::string> audits(n);
  std::vector<std::string> notes(n);
  for (const auto& item : manifest.items) {
    fs::create_directories((out_dir / "images" / variant_image_path("", item.image)).parent_path());
  }

  parallel_for(n, config.workers, [&](std::size_t i) {
    const auto& item = manifest.items[i];
    PolicySample sample{item.id, read_image(manifest.image_root / item.image), item.captions};
    const auto result = apply_policy(sample, config.seed(), args.epoch, ctx);
    auto rel = fs::path("images") / variant_image_path("", item.image);
    write_png(result.image, out_dir / rel);

    ManifestItem out = item;
    out.image = rel.generic_string();
    out.captions = result.captions;
    const auto& img = result.audit.front();
    if (img.augment) out.corruption = CorruptionRecord{img.image_kind, img.severity, operator_seed(img.seed)};
    items[i] = std::move(out);

    std::string audit = audit_json(img, item.id, std::nullopt) + '\n';
    for (std::size_t j = 1; j < result.audit.size(); ++j) {
      audit += audit_json(result.audit[j], item.id, j - 1) + '\n';
    }
    audits[i] = std::move(audit);
    for (const auto& note : result.notes) notes[i] += note + '\n';
  });

  std::ofstream mf(out_dir / "manifest.jsonl", std::ios::binary);
  std::ofstream af(out_dir / "audit.jsonl", std::ios::binary);
  if (!mf || !af) fail(ErrorCode::kIo, "cannot write outputs under " + out_dir.string());
  std::size_t augmented_images = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mf << manifest_line(items[i]) << '\n';
    af << audits[i];
    if (items[i].corruption) ++augmented_images;
  }
  auto prov = provenance(config, "apply-policy");
  prov["manifest"] = args.manifest;
  prov["epoch"] = args.epoch;
  prov["policy"] = nlohmann::json::parse(ctx.config.to_json());
  std::ofstream(out_dir / "provenance.json", std::ios::binary) << prov.dump(2) << '\n';

  std::string all_notes;
  for (const auto& s : notes) all_notes += s;
  nlohmann::json summary = {{"items", n}, {"augmented_images", augmented_images},
                            {"out_dir", args.out_dir}, {"seed", config.seed()},
                            {"epoch", args.epoch}};
  std::ostringstream text;
  text << n << " items written to " << args.out_dir << " (" << augmented_images
       << " images augmented), seed " << config.seed() << ", epoch " << args.epoch;
  if (!all_notes.empty()) std::cerr << all_notes;
  emit(config, summary, text.str());
  return 0;
}

}  // namespace

void add_policy_commands(CLI::App& app, RunConfig& config, Action& action) {
  auto* policy = app.add_subcommand("policy", "Augmentation policy");
  policy->require_subcommand(1);
  policy->fallthrough();
  auto* sample = policy->add_subcommand("sample", "Draw policy decisions");
  sample->fallthrough();
  auto sargs = std::make_shared<SampleArgs>();
  sample->add_option("--count", sargs->count, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--modality", sargs->modality, "image or text")
      ->check(CLI::IsMember({"image", "text"}));
  sample->add_option("--policy", sargs->policy, "Policy config JSON")->check(CLI::ExistingFile);
  sample->add_option("--out", sargs->out, "Write the decision JSONL here");
  sample->callback([&config, &action, sargs] { action = [&config, sargs] { return run_sample(config, *sargs); }; });

  auto* apply = app.add_subcommand("apply-policy", "Apply the policy to a manifest");
  apply->fallthrough();
  auto aargs = std::make_shared<ApplyArgs>();
  apply->add_option("--manifest", aargs->manifest, "Input manifest JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  apply->add_option("--out-dir", aargs->out_dir, "Output directory")->required();
  apply->add_option("--image-root", aargs->image_root, "Base directory of manifest images");
  apply->add_option("--split", aargs->split, "train, val, test or all");
  apply->add_option("--epoch", aargs->epoch, "Epoch index for the per-epoch seed schedule")
      ->check(CLI::NonNegativeNumber);
  apply->add_option("--policy", aargs->policy, "Policy config JSON")->check(CLI::ExistingFile);
  apply->callback([&config, &action, aargs] { action = [&config, aargs] { return run_apply(config, *aargs); }; });
}

}  // namespace spaug::cli
