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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "spaug/imgcorrupt/severity_table.hpp"
#include "spaug/textaug/augment.hpp"

namespace spaug::cli {

enum class OutputFormat { kJson, kText };

/// Options shared by every subcommand.
struct RunConfig {
  std::optional<std::uint64_t> seed_flag;
  unsigned workers = 1;
  std::string lexicon_path;
  std::string thesaurus_path;
  std::string severity_table_path;
  std::string translator = "stub";
  std::string translation_cache;
  std::string format = "json";
  bool verbose = false;

  /// Resolves lazily-loaded resources; call once after parsing.
  void finalize();

  std::uint64_t seed() const { return seed_; }
  bool seed_was_random() const { return !seed_flag.has_value(); }
  OutputFormat output_format() const;

  const Lexicon& lexicon() const;
  const Thesaurus& thesaurus() const;
  const SeverityTable& severity_table() const;
  /// Built on first use from --translator and SPAUG_TRANSLATOR_URL.
  TranslatorClient& translator_client();
  TextAugConfig text_config();

 private:
  std::uint64_t seed_ = 0;
  std::unique_ptr<Lexicon> lexicon_;
  std::unique_ptr<Thesaurus> thesaurus_;
  std::unique_ptr<SeverityTable> table_;
  std::shared_ptr<TranslatorClient> translator_;
};

/// Tool, version, command and effective seed; embedded in every artifact.
nlohmann::json provenance(const RunConfig& config, const std::string& command);

std::string hex64(std::uint64_t v);

}  // namespace spaug::cli
