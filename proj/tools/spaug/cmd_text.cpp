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
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "spaug/common/error.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/textaug/tokenizer.hpp"

namespace spaug::cli {

namespace {

struct AugmentArgs {
  std::string kind;
  std::string text;
  std::string input;
  std::string out;
  std::string audit;
  std::vector<std::string> pivots{"fr"};
  double rate = kDefaultSynonymRate;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

int run_augment(RunConfig& config, const AugmentArgs& args) {
  const auto kind = text_aug_kind_from_string(args.kind);
  std::vector<std::string> sentences;
  if (!args.text.empty()) sentences.push_back(args.text);
  if (!args.input.empty()) {
    auto more = read_lines(args.input);
    sentences.insert(sentences.end(), more.begin(), more.end());
  }
  if (sentences.empty()) fail(ErrorCode::kInvalidArgument, "give --text or --input");

  auto text_cfg = config.text_config();
  text_cfg.pivots = args.pivots;
  text_cfg.synonym_rate = args.rate;

  std::vector<std::string> outputs;
  std::vector<nlohmann::json> audit;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto seed = derive_subseed(config.seed(), "sentence:" + std::to_string(i));
    const auto seq = tokenize(sentences[i], *text_cfg.lexicon);
    const auto res = augment_text(seq, kind, seed, text_cfg);
    auto out = detokenize(res.seq);
    nlohmann::json a = {{"index", i},      {"kind", args.kind}, {"seed", seed},
                        {"input", sentences[i]}, {"output", out},
                        {"changed", res.seq.tokens != seq.tokens}};
    if (!a["changed"].get<bool>()) a["note"] = "no-op: no eligible tokens";
    if (kind == TextAugKind::kBackTranslation) {
      a["translator"] = res.translator_id;
      a["pivot"] = res.pivot;
    }
    outputs.push_back(std::move(out));
    audit.push_back(std::move(a));
  }

  auto audit_path = args.audit;
  if (audit_path.empty() && !args.out.empty()) audit_path = args.out + ".audit.jsonl";
  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::binary);
    if (!f) fail(ErrorCode::kIo, "cannot write " + args.out);
    for (const auto& o : outputs) f << o << '\n';
  }
  if (!audit_path.empty()) {
    std::ofstream f(audit_path, std::ios::binary);
    if (!f) fail(ErrorCode::kIo, "cannot write " + audit_path);
    const auto prov = provenance(config, "text augment");
    for (auto& a : audit) {
      a["provenance"] = prov;
      f << a.dump() << '\n';
    }
  }

  if (config.output_format() == OutputFormat::kText) {
    if (args.out.empty()) {
      for (const auto& o : outputs) std::cout << o << '\n';
    } else {
      std::cout << outputs.size() << " sentence(s) written to " << args.out << '\n';
    }
  } else {
    for (const auto& a : audit) {
      nlohmann::json line = a;
      line.erase("provenance");
      std::cout << line.dump() << '\n';
    }
  }
  return 0;
}

}  // namespace

void add_text_commands(CLI::App& app, RunConfig& config, Action& action) {
  auto* text = app.add_subcommand("text", "Text augmentation");
  text->require_subcommand(1);
  text->fallthrough();
  auto* cmd = text->add_subcommand("augment", "Augment sentences with one operator");
  cmd->fallthrough();
  auto args = std::make_shared<AugmentArgs>();
  cmd->add_option("--kind", args->kind, "synonym_replacement, article_removal, back_translation, "
                                        "be_verb_error, verb_tense_error, singular_plural_error")
      ->required();
  cmd->add_option("--text", args->text, "One sentence");
  cmd->add_option("--input", args->input, "File with one sentence per line")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args->out, "Write augmented sentences here");
  cmd->add_option("--audit", args->audit, "Audit JSONL (default: <out>.audit.jsonl)");
  cmd->add_option("--pivot", args->pivots, "Back-translation pivot language(s)");
  cmd->add_option("--rate", args->rate, "Synonym replacement rate")->check(CLI::Range(0.0, 1.0));
  cmd->callback([&config, &action, args] { action = [&config, args] { return run_augment(config, *args); }; });
}

}  // namespace spaug::cli
