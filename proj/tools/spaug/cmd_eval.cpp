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

#include <fstream>

#include "commands.hpp"
#include "spaug/common/error.hpp"
#include "spaug/retrieval/evaluate.hpp"

namespace spaug::cli {

namespace {

struct EvalArgs {
  std::string img_emb;
  std::string txt_emb;
  std::string protocol = "flickr30k";
  std::size_t folds = 5;
  std::string out;
};

int run_eval(RunConfig& config, const EvalArgs& args) {
  EvalOptions opts;
  opts.folds = args.folds;
  opts.workers = config.workers;
  const auto report =
      evaluate_files(args.img_emb, args.txt_emb, protocol_from_string(args.protocol), opts);
  const auto json = report_to_json(report);
  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) fail(ErrorCode::kIo, "cannot write " + args.out);
    f << json << '\n';
  }
  emit(config, nlohmann::json::parse(json), report_to_text(report));
  return 0;
}

}  // namespace

void add_eval_command(CLI::App& app, RunConfig& config, Action& action) {
  auto* cmd = app.add_subcommand("eval", "Recall@K / RSUM from embedding files");
  cmd->fallthrough();
  auto args = std::make_shared<EvalArgs>();
  cmd->add_option("--img-emb", args->img_emb, "Image embeddings (VSEB)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--txt-emb", args->txt_emb, "Caption embeddings (VSEB), 5 per image")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--protocol", args->protocol, "flickr30k or coco1k")
      ->check(CLI::IsMember({"flickr30k", "coco1k"}));
  cmd->add_option("--folds", args->folds, "coco1k folds of 1,000 images")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", args->out, "Also write the JSON report here");
  cmd->callback([&config, &action, args] { action = [&config, args] { return run_eval(config, *args); }; });
}

}  // namespace spaug::cli
