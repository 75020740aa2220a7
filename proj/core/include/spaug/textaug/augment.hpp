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
#include <string>
#include <vector>

#include "spaug/textaug/lexicon.hpp"
#include "spaug/textaug/thesaurus.hpp"
#include "spaug/textaug/token.hpp"
#include "spaug/textaug/translator.hpp"

namespace spaug {

inline constexpr double kDefaultSynonymRate = 0.3;

/// Deletes every a/an/the token.
TokenSeq article_removal(const TokenSeq& s);

/// Replaces each be-verb with a different, uniformly drawn be-verb.
TokenSeq be_verb_error(const TokenSeq& s, std::uint64_t seed);

/// Replaces each verb and be-verb with a uniformly drawn form of the same
/// lemma; if every draw kept the original form, one position is forced to change.
TokenSeq verb_tense_error(const TokenSeq& s, std::uint64_t seed,
                          const Lexicon& lexicon = Lexicon::defaults());

/// Toggles the number of every countable noun. Deterministic; `seed` is
/// accepted for a uniform operator signature.
TokenSeq singular_plural_error(const TokenSeq& s, std::uint64_t seed,
                               const Lexicon& lexicon = Lexicon::defaults());

/// Replaces each noun/verb/adjective that has a thesaurus entry with
/// probability `rate` (at least one when any candidate exists). Synonyms are
/// inflected to the original form, keep its leading case, and an a/an directly
/// before a replaced word is re-agreed.
TokenSeq synonym_replacement(const TokenSeq& s, const Thesaurus& thesaurus, double rate,
                             std::uint64_t seed, const Lexicon& lexicon = Lexicon::defaults());

struct BackTranslation {
  TokenSeq seq;
  std::string translator_id;
  std::string pivot;
};

/// source -> pivot -> source round trip. TransportError propagates.
BackTranslation back_translate(const TokenSeq& s, TranslatorClient& translator,
                               const std::string& pivot, std::uint64_t seed,
                               const Lexicon& lexicon = Lexicon::defaults(),
                               const std::string& source_lang = "en");

struct TextAugConfig {
  const Lexicon* lexicon = &Lexicon::defaults();
  const Thesaurus* thesaurus = &Thesaurus::defaults();
  TranslatorClient* translator = nullptr;  // identity when null
  double synonym_rate = kDefaultSynonymRate;
  std::string source_lang = "en";
  std::vector<std::string> pivots = {"fr"};  // one drawn per call
};

struct TextAugResult {
  TokenSeq seq;
  std::string translator_id;  // back-translation only
  std::string pivot;          // back-translation only
};

/// Applies one augmentation kind with a kind-specific sub-seed of `seed`.
TextAugResult augment_text(const TokenSeq& s, TextAugKind kind, std::uint64_t seed,
                           const TextAugConfig& config = {});

/// Indefinite article for a following word ("a" or "an").
std::string indefinite_article_for(std::string_view word);

}  // namespace spaug
