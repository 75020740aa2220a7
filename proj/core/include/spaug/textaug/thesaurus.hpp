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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spaug/textaug/token.hpp"

namespace spaug {

/// Same-pos synonym lists keyed by (lemma, pos).
///
/// File rows: `word TAB pos TAB comma-separated synonyms`; `#` starts a
/// comment line. A word listing itself is rejected.
class Thesaurus {
 public:
  Thesaurus() = default;

  static const Thesaurus& defaults();
  static Thesaurus parse(std::string_view text);
  static Thesaurus load(const std::filesystem::path& path);

  /// Adds an entry programmatically; same validation as parsing.
  void add(std::string_view word, PartOfSpeech pos, std::vector<std::string> synonyms);

  std::span<const std::string> synonyms(std::string_view word, PartOfSpeech pos) const;
  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::pair<std::string, PartOfSpeech>, std::vector<std::string>, std::less<>> entries_;
};

}  // namespace spaug
