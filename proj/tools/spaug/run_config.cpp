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

#include "run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>

#include "spaug/common/error.hpp"
#include "spaug/common/log.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/version.hpp"

namespace spaug::cli {

void RunConfig::finalize() {
  if (workers < 1) fail(ErrorCode::kInvalidArgument, "--workers must be at least 1");
  if (seed_flag) {
    seed_ = *seed_flag;
  } else {
    std::random_device rd;
    seed_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "spaug: no --seed given; using seed " << seed_ << "\n";
  }
  if (verbose) set_log_level(LogLevel::kInfo);
  if (!lexicon_path.empty()) lexicon_ = std::make_unique<Lexicon>(Lexicon::load(lexicon_path));
  if (!thesaurus_path.empty()) {
    thesaurus_ = std::make_unique<Thesaurus>(Thesaurus::load(thesaurus_path));
  }
  if (!severity_table_path.empty()) {
    table_ = std::make_unique<SeverityTable>(SeverityTable::load(severity_table_path));
  }
}

OutputFormat RunConfig::output_format() const {
  return format == "text" ? OutputFormat::kText : OutputFormat::kJson;
}

const Lexicon& RunConfig::lexicon() const { return lexicon_ ? *lexicon_ : Lexicon::defaults(); }

const Thesaurus& RunConfig::thesaurus() const {
  return thesaurus_ ? *thesaurus_ : Thesaurus::defaults();
}

const SeverityTable& RunConfig::severity_table() const {
  return table_ ? *table_ : SeverityTable::defaults();
}

TranslatorClient& RunConfig::translator_client() {
  if (translator_) return *translator_;
  std::string spec = translator;
  const char* env = std::getenv("SPAUG_TRANSLATOR_URL");
  if (spec == "stub") spec = "identity";
  if (spec == "real") {
    if (!env || !*env) {
      fail(ErrorCode::kInvalidArgument,
           "--translator real needs SPAUG_TRANSLATOR_URL to name an http:// endpoint");
    }
    spec = env;
  } else if (spec.rfind("http://", 0) == 0 && env && *env) {
    spec = env;  // environment overrides a configured endpoint
  }
  translator_ = make_translator(spec, translation_cache);
  return *translator_;
}

TextAugConfig RunConfig::text_config() {
  TextAugConfig c;
  c.lexicon = &lexicon();
  c.thesaurus = &thesaurus();
  c.translator = &translator_client();
  return c;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json provenance(const RunConfig& config, const std::string& command) {
  return {{"tool", "spaug"},
          {"version", kVersion},
          {"command", command},
          {"seed", config.seed()},
          {"severity_table",
           config.severity_table_path.empty() ? std::string("builtin") : config.severity_table_path},
          {"severity_table_hash", hex64(derive_subseed(0, config.severity_table().to_text()))}};
}

}  // namespace spaug::cli
