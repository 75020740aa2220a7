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

#include <sstream>

#include "commands.hpp"
#include "spaug/common/error.hpp"
#include "spaug/dataset/test_suite.hpp"

namespace spaug::cli {

namespace {

struct GenArgs {
  std::string manifest;
  std::string out_dir;
  std::string image_root;
  std::string layout;
  int severity = 3;
  bool fail_on_translator_error = false;
};

int run_gen(RunConfig& config, const GenArgs& args) {
  ManifestLoadOptions load_opts;
  load_opts.image_root = args.image_root;
  Manifest manifest = load_manifest(args.manifest, load_opts);
  if (!args.layout.empty()) assign_splits(manifest, layout_from_string(args.layout));
  const auto test = manifest.restricted_to(Split::kTest);
  if (test.items.empty()) fail(ErrorCode::kValidation, "manifest has no test items");

  SuiteOptions opts;
  opts.severity = args.severity;
  opts.seed = config.seed();
  opts.workers = config.workers;
  opts.severity_table = &config.severity_table();
  opts.text = config.text_config();
  opts.fallback_on_transport_error = !args.fail_on_translator_error;
  opts.source_name = args.manifest;
  const auto suite = generate_test_suite(test, opts, args.out_dir);

  const auto image_variants = suite.seen.size() + suite.unseen.size() + suite.mixed.size();
  nlohmann::json summary = {
      {"out_dir", args.out_dir},
      {"seed", config.seed()},
      {"severity", args.severity},
      {"items", test.items.size()},
      {"image_variants", image_variants},
      {"seen", suite.seen.size()},
      {"unseen", suite.unseen.size()},
      {"mixed", suite.mixed.size()},
      {"text_variants", suite.text.size()},
      {"files_written", suite.files_written},
      {"files_unchanged", suite.files_unchanged},
      {"up_to_date", suite.files_written == 0},
  };
  std::ostringstream text;
  text << image_variants << " image variants (" << suite.seen.size() << " seen, "
       << suite.unseen.size() << " unseen, " << suite.mixed.size() << " mixed) and "
       << suite.text.size() << " text variants over " << test.items.size() << " items in "
       << args.out_dir << "; seed " << config.seed() << ", severity " << args.severity << '\n';
  if (suite.files_written == 0) {
    text << "up-to-date, 0 files rewritten";
  } else {
    text << suite.files_written << " files written, " << suite.files_unchanged << " unchanged";
  }
  emit(config, summary, text.str());
  return 0;
}

}  // namespace

void add_dataset_commands(CLI::App& app, RunConfig& config, Action& action) {
  auto* cmd = app.add_subcommand("gen-testsets", "Materialize the corrupted test suite");
  cmd->fallthrough();
  auto args = std::make_shared<GenArgs>();
  cmd->add_option("--manifest", args->manifest, "Clean manifest JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out-dir", args->out_dir, "Output directory")->required();
  cmd->add_option("--severity", args->severity, "Severity 1-5 for every image variant")
      ->check(CLI::Range(1, 5));
  cmd->add_option("--image-root", args->image_root, "Base directory of manifest images");
  cmd->add_option("--layout", args->layout, "Reassign splits: flickr30k or coco")
      ->check(CLI::IsMember({"flickr30k", "coco"}));
  cmd->add_flag("--fail-on-translator-error", args->fail_on_translator_error,
                "Abort instead of keeping captions the translator could not process");
  cmd->callback([&config, &action, args] { action = [&config, args] { return run_gen(config, *args); }; });
}

}  // namespace spaug::cli
