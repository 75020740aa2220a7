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

#include "spaug/textaug/thesaurus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "common/text_util.hpp"
#include "spaug/common/error.hpp"

namespace spaug {

extern const char* const kEmbeddedThesaurus;

const Thesaurus& Thesaurus::defaults() {
  static const Thesaurus thesaurus = parse(kEmbeddedThesaurus);
  return thesaurus;
}

Thesaurus Thesaurus::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open thesaurus file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Thesaurus Thesaurus::parse(std::string_view text) {
  Thesaurus t;
  detail::for_each_line(text, [&](int line_no, std::string_view raw) {
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto cols = detail::split(line, '\t');
    const auto where = "thesaurus line " + std::to_string(line_no) + ": ";
    if (cols.size() != 3) fail(ErrorCode::kSchema, where + "expected 3 tab-separated columns");
    const auto pos = parse_part_of_speech(detail::trim(cols[1]));
    if (!pos) fail(ErrorCode::kSchema, where + "unknown pos tag '" + std::string(cols[1]) + "'");
    std::vector<std::string> syns;
    for (auto s : detail::split(cols[2], ',')) {
      s = detail::trim(s);
      if (!s.empty()) syns.push_back(to_lower(s));
    }
    try {
      t.add(detail::trim(cols[0]), *pos, std::move(syns));
    } catch (const Error& e) {
      fail(ErrorCode::kSchema, where + e.what());
    }
  });
  return t;
}

void Thesaurus::add(std::string_view word, PartOfSpeech pos, std::vector<std::string> synonyms) {
  const auto key = to_lower(word);
  if (key.empty()) fail(ErrorCode::kSchema, "empty thesaurus word");
  if (synonyms.empty()) fail(ErrorCode::kSchema, "'" + key + "' has no synonyms");
  for (const auto& s : synonyms) {
    if (s == key) fail(ErrorCode::kSchema, "'" + key + "' lists itself as a synonym");
  }
  auto& list = entries_[{key, pos}];
  for (auto& s : synonyms) {
    if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(std::move(s));
  }
}

std::span<const std::string> Thesaurus::synonyms(std::string_view word, PartOfSpeech pos) const {
  const auto it = entries_.find(std::pair<std::string, PartOfSpeech>(to_lower(word), pos));
  if (it == entries_.end()) return {};
  return it->second;
}

bool Thesaurus::contains(std::string_view word) const {
  const auto key = to_lower(word);
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first.first == key; });
}

}  // namespace spaug
