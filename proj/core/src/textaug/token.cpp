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

#include "spaug/textaug/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "spaug/common/error.hpp"

namespace spaug {
namespace {

constexpr std::array<TextAugKind, kTextAugKindCount> kKinds = {
    TextAugKind::kSynonymReplacement, TextAugKind::kArticleRemoval,
    TextAugKind::kBackTranslation,    TextAugKind::kBeVerbError,
    TextAugKind::kVerbTenseError,     TextAugKind::kSingularPluralError,
};

constexpr std::array<std::string_view, kTextAugKindCount> kKindNames = {
    "synonym_replacement", "article_removal", "back_translation",
    "be_verb_error",       "verb_tense_error", "singular_plural_error",
};

}  // namespace

std::string_view to_string(PartOfSpeech pos) noexcept {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kBeVerb: return "be_verb";
    case PartOfSpeech::kArticle: return "article";
    case PartOfSpeech::kAdjective: return "adjective";
    case PartOfSpeech::kOther: return "other";
  }
  return "other";
}

std::optional<PartOfSpeech> parse_part_of_speech(std::string_view tag) noexcept {
  for (auto pos : {PartOfSpeech::kNoun, PartOfSpeech::kVerb, PartOfSpeech::kBeVerb,
                   PartOfSpeech::kArticle, PartOfSpeech::kAdjective, PartOfSpeech::kOther}) {
    if (to_string(pos) == tag) return pos;
  }
  return std::nullopt;
}

std::span<const TextAugKind> text_aug_kinds() { return kKinds; }

std::string_view to_string(TextAugKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<TextAugKind> parse_text_aug_kind(std::string_view tag) noexcept {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == tag) return kKinds[i];
  }
  return std::nullopt;
}

TextAugKind text_aug_kind_from_string(std::string_view tag) {
  if (auto kind = parse_text_aug_kind(tag)) return *kind;
  std::string valid;
  for (auto name : kKindNames) {
    if (!valid.empty()) valid += ", ";
    valid += name;
  }
  fail(ErrorCode::kInvalidArgument,
       "unknown text augmentation '" + std::string(tag) + "'; valid kinds: " + valid);
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool starts_upper(std::string_view s) noexcept {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

std::string with_leading_case(std::string_view word, bool upper) {
  std::string out(word);
  if (!out.empty()) {
    const auto c = static_cast<unsigned char>(out.front());
    out.front() = static_cast<char>(upper ? std::toupper(c) : std::tolower(c));
  }
  return out;
}

bool is_alpha_word(std::string_view s) noexcept {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '-' || c == '\'';
  }) && std::isalpha(static_cast<unsigned char>(s.front()));
}

bool is_punctuation(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c));
  });
}

bool is_be_verb(std::string_view lower) noexcept {
  return std::find(std::begin(kBeVerbs), std::end(kBeVerbs), lower) != std::end(kBeVerbs);
}

bool is_article(std::string_view lower) noexcept {
  return std::find(std::begin(kArticles), std::end(kArticles), lower) != std::end(kArticles);
}

}  // namespace spaug
