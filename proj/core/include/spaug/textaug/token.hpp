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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spaug {

enum class PartOfSpeech { kNoun, kVerb, kBeVerb, kArticle, kAdjective, kOther };

std::string_view to_string(PartOfSpeech pos) noexcept;
std::optional<PartOfSpeech> parse_part_of_speech(std::string_view tag) noexcept;

struct Token {
  std::string surface;
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::string lemma;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Annotated token sequence of one sentence.
struct TokenSeq {
  std::vector<Token> tokens;
  std::string original_text;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
};

// Frozen order; the policy sampler indexes into it.
enum class TextAugKind {
  kSynonymReplacement,
  kArticleRemoval,
  kBackTranslation,
  kBeVerbError,
  kVerbTenseError,
  kSingularPluralError,
};

inline constexpr int kTextAugKindCount = 6;

std::span<const TextAugKind> text_aug_kinds();
std::string_view to_string(TextAugKind kind) noexcept;
std::optional<TextAugKind> parse_text_aug_kind(std::string_view tag) noexcept;
/// Throws invalid-argument listing the valid tags.
TextAugKind text_aug_kind_from_string(std::string_view tag);

// ASCII helpers used throughout the text module.
std::string to_lower(std::string_view s);
bool starts_upper(std::string_view s) noexcept;
/// Uppercases the first character when `upper` is set, lowercases it otherwise.
std::string with_leading_case(std::string_view word, bool upper);
bool is_alpha_word(std::string_view s) noexcept;
bool is_punctuation(std::string_view s) noexcept;

inline constexpr std::string_view kBeVerbs[] = {"am",   "is",   "are",  "was",
                                                "were", "be",   "been", "being"};
inline constexpr std::string_view kArticles[] = {"a", "an", "the"};

bool is_be_verb(std::string_view lower) noexcept;
bool is_article(std::string_view lower) noexcept;

}  // namespace spaug
