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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spaug/textaug/token.hpp"

namespace spaug {

enum class VerbForm { kBase, kThirdSingular, kPast, kPastParticiple, kGerund };
enum class NounNumber { kSingular, kPlural };

/// One way of reading a surface form.
struct Reading {
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::string lemma;
  NounNumber number = NounNumber::kSingular;  // meaningful for nouns
  VerbForm form = VerbForm::kBase;            // meaningful for verbs
};

struct Conjugation {
  std::string base;
  std::string third_singular;
  std::string past;
  std::string past_participle;
  std::string gerund;

  const std::string& form(VerbForm f) const noexcept;
  /// Distinct surface forms in base, 3sg, past, pp, gerund order.
  std::vector<std::string> distinct_forms() const;
};

/// Word list with ranked part-of-speech tags, irregular inflections and
/// regular-rule fallbacks. Immutable after construction.
///
/// File rows: `word TAB pos-list TAB lemma TAB inflections`, where pos-list is
/// comma separated (most frequent first) and inflections is a comma separated
/// list of `pl=`, `3sg=`, `past=`, `pp=`, `ger=` overrides. `pl=-` marks an
/// uncountable noun. Empty lemma or inflection columns may be written as `-`.
/// Lines starting with `#` are comments.
class Lexicon {
 public:
  Lexicon() = default;

  static const Lexicon& defaults();
  static std::string_view default_text() noexcept;
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& path);

  /// Readings of a lowercase surface form, best first; empty if unknown.
  const std::vector<Reading>* lookup(std::string_view lower) const;
  /// Best reading for any word; falls back to suffix rules for unknown words.
  Reading analyze(std::string_view word) const;

  bool is_uncountable(std::string_view lemma) const;
  std::string pluralize(std::string_view singular) const;
  std::string singularize(std::string_view plural) const;
  Conjugation conjugate(std::string_view lemma) const;

  /// Nouns whose plural follows the regular rules.
  std::vector<std::string> regular_nouns() const;
  /// Verb lemmas with a conjugation row (explicit or fully regular).
  std::vector<std::string> verb_lemmas() const;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  struct Row {
    std::string word;
    std::vector<PartOfSpeech> tags;
    std::string lemma;
    std::optional<std::string> plural;  // "-" = uncountable
    std::optional<std::string> forms[4];
  };

  void build_index();
  void add_reading(const std::string& surface, Reading r);

  std::vector<Row> rows_;
  std::unordered_map<std::string, std::size_t> row_by_word_;
  std::unordered_map<std::string, std::vector<Reading>> index_;
};

// Regular inflection rules, usable without a lexicon.
std::string regular_plural(std::string_view singular);
std::string regular_singular(std::string_view plural);
Conjugation regular_conjugation(std::string_view lemma);
/// Best-effort lemma of an unknown -ing / -ed form.
std::string guess_verb_lemma(std::string_view form, VerbForm kind);

}  // namespace spaug
