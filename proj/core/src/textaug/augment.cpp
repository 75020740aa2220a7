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

#include "spaug/textaug/augment.hpp"

#include <algorithm>
#include <array>

#include "spaug/common/error.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/textaug/tokenizer.hpp"

namespace spaug {
namespace {

Rng op_rng(std::uint64_t seed, std::string_view op) { return Rng(derive_subseed(seed, op)); }

Token replaced(const Token& original, const std::string& lower_form) {
  Token t = original;
  t.surface = with_leading_case(lower_form, starts_upper(original.surface));
  return t;
}

NounNumber noun_number(const Lexicon& lexicon, const std::string& lower) {
  if (const auto* readings = lexicon.lookup(lower)) {
    for (const auto& r : *readings) {
      if (r.pos == PartOfSpeech::kNoun) return r.number;
    }
  }
  return lexicon.analyze(lower).number;
}

// Applies `fn` to the head word of a phrase: last word for nouns, first for verbs.
template <typename Fn>
std::string inflect_phrase(const std::string& phrase, bool head_is_last, Fn&& fn) {
  const auto sp = head_is_last ? phrase.rfind(' ') : phrase.find(' ');
  if (sp == std::string::npos) return fn(phrase);
  if (head_is_last) return phrase.substr(0, sp + 1) + fn(phrase.substr(sp + 1));
  return fn(phrase.substr(0, sp)) + phrase.substr(sp);
}

std::string inflect_like(const std::string& synonym, const Token& original, const Lexicon& lexicon) {
  const auto lower = to_lower(original.surface);
  if (original.pos == PartOfSpeech::kNoun) {
    if (noun_number(lexicon, lower) != NounNumber::kPlural) return synonym;
    return inflect_phrase(synonym, true, [&](const std::string& w) { return lexicon.pluralize(w); });
  }
  if (original.pos == PartOfSpeech::kVerb) {
    VerbForm form = VerbForm::kBase;
    if (const auto* readings = lexicon.lookup(lower)) {
      for (const auto& r : *readings) {
        if (r.pos == PartOfSpeech::kVerb) {
          form = r.form;
          break;
        }
      }
    } else {
      form = lexicon.analyze(lower).form;
    }
    if (form == VerbForm::kBase) return synonym;
    return inflect_phrase(synonym, false,
                          [&](const std::string& w) { return lexicon.conjugate(w).form(form); });
  }
  return synonym;
}

std::span<const std::string> synonyms_for(const Token& tok, const Thesaurus& thesaurus,
                                          const Lexicon& lexicon) {
  if (auto s = thesaurus.synonyms(tok.lemma, tok.pos); !s.empty()) return s;
  const auto lower = to_lower(tok.surface);
  if (auto s = thesaurus.synonyms(lower, tok.pos); !s.empty()) return s;
  // A word tagged adjective may still have a noun entry ("male"), and so on.
  if (const auto* readings = lexicon.lookup(lower)) {
    for (const auto& r : *readings) {
      if (r.pos != PartOfSpeech::kNoun && r.pos != PartOfSpeech::kVerb &&
          r.pos != PartOfSpeech::kAdjective) {
        continue;
      }
      if (auto s = thesaurus.synonyms(r.lemma, r.pos); !s.empty()) return s;
    }
  }
  return {};
}

bool is_content(PartOfSpeech pos) {
  return pos == PartOfSpeech::kNoun || pos == PartOfSpeech::kVerb ||
         pos == PartOfSpeech::kAdjective;
}

}  // namespace

std::string indefinite_article_for(std::string_view word) {
  const auto w = to_lower(word);
  static constexpr std::array<std::string_view, 6> kSilentH = {"hour", "honest", "honor",
                                                               "honour", "heir", "herb"};
  static constexpr std::array<std::string_view, 6> kYouSound = {"uni", "use", "usu",
                                                                "eu", "one", "once"};
  for (auto p : kSilentH) {
    if (w.rfind(p, 0) == 0) return "an";
  }
  for (auto p : kYouSound) {
    if (w.rfind(p, 0) == 0) return "a";
  }
  return !w.empty() && std::string_view("aeiou").find(w[0]) != std::string_view::npos ? "an" : "a";
}

TokenSeq article_removal(const TokenSeq& s) {
  TokenSeq out;
  out.original_text = s.original_text;
  for (const auto& tok : s.tokens) {
    if (!is_article(to_lower(tok.surface))) out.tokens.push_back(tok);
  }
  return out;
}

TokenSeq be_verb_error(const TokenSeq& s, std::uint64_t seed) {
  auto rng = op_rng(seed, "be_verb_error");
  TokenSeq out = s;
  for (auto& tok : out.tokens) {
    if (tok.pos != PartOfSpeech::kBeVerb) continue;
    const auto lower = to_lower(tok.surface);
    std::vector<std::string_view> others;
    for (auto b : kBeVerbs) {
      if (b != lower) others.push_back(b);
    }
    tok = replaced(tok, std::string(others[rng.below(others.size())]));
  }
  return out;
}

TokenSeq verb_tense_error(const TokenSeq& s, std::uint64_t seed, const Lexicon& lexicon) {
  auto rng = op_rng(seed, "verb_tense_error");
  TokenSeq out = s;
  std::vector<std::size_t> positions;
  std::vector<std::vector<std::string>> forms;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const auto& tok = s.tokens[i];
    if (tok.pos == PartOfSpeech::kBeVerb) {
      positions.push_back(i);
      forms.emplace_back(std::begin(kBeVerbs), std::end(kBeVerbs));
    } else if (tok.pos == PartOfSpeech::kVerb) {
      positions.push_back(i);
      forms.push_back(lexicon.conjugate(tok.lemma).distinct_forms());
    }
  }
  bool changed = false;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const auto& tok = s.tokens[positions[k]];
    const auto& pick = forms[k][rng.below(forms[k].size())];
    if (pick != to_lower(tok.surface)) changed = true;
    out.tokens[positions[k]] = replaced(tok, pick);
  }
  if (!changed) {
    std::vector<std::size_t> changeable;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const auto lower = to_lower(s.tokens[positions[k]].surface);
      if (std::any_of(forms[k].begin(), forms[k].end(), [&](const auto& f) { return f != lower; })) {
        changeable.push_back(k);
      }
    }
    if (!changeable.empty()) {
      const auto k = changeable[rng.below(changeable.size())];
      const auto& tok = s.tokens[positions[k]];
      const auto lower = to_lower(tok.surface);
      std::vector<std::string> others;
      for (const auto& f : forms[k]) {
        if (f != lower) others.push_back(f);
      }
      out.tokens[positions[k]] = replaced(tok, others[rng.below(others.size())]);
    }
  }
  return out;
}

TokenSeq singular_plural_error(const TokenSeq& s, std::uint64_t /*seed*/, const Lexicon& lexicon) {
  TokenSeq out = s;
  for (auto& tok : out.tokens) {
    if (tok.pos != PartOfSpeech::kNoun) continue;
    const auto lower = to_lower(tok.surface);
    if (noun_number(lexicon, lower) == NounNumber::kPlural) {
      tok = replaced(tok, lexicon.singularize(lower));
    } else if (!lexicon.is_uncountable(lower)) {
      tok = replaced(tok, lexicon.pluralize(lower));
    }
  }
  return out;
}

TokenSeq synonym_replacement(const TokenSeq& s, const Thesaurus& thesaurus, double rate,
                             std::uint64_t seed, const Lexicon& lexicon) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "synonym rate must lie in (0, 1]");
  }
  auto rng = op_rng(seed, "synonym_replacement");
  std::vector<std::size_t> candidates;
  std::vector<std::span<const std::string>> lists;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (!is_content(s.tokens[i].pos)) continue;
    const auto syns = synonyms_for(s.tokens[i], thesaurus, lexicon);
    if (syns.empty()) continue;
    candidates.push_back(i);
    lists.push_back(syns);
  }

  std::vector<int> choice(candidates.size(), -1);
  bool any = false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const bool take = rng.bernoulli(rate);
    const auto pick = rng.below(lists[k].size());
    if (take) {
      choice[k] = static_cast<int>(pick);
      any = true;
    }
  }
  if (!any && !candidates.empty()) {
    const auto k = rng.below(candidates.size());
    choice[k] = static_cast<int>(rng.below(lists[k].size()));
  }

  TokenSeq out = s;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (choice[k] < 0) continue;
    const auto i = candidates[k];
    const auto& tok = s.tokens[i];
    const auto form = inflect_like(lists[k][choice[k]], tok, lexicon);
    out.tokens[i] = replaced(tok, form);
    if (i > 0) {
      auto& prev = out.tokens[i - 1];
      const auto art = to_lower(prev.surface);
      if (art == "a" || art == "an") {
        const auto fixed = indefinite_article_for(form);
        if (fixed != art) {
          prev.surface = with_leading_case(fixed, starts_upper(prev.surface));
          prev.lemma = fixed;
        }
      }
    }
  }
  return out;
}

BackTranslation back_translate(const TokenSeq& s, TranslatorClient& translator,
                               const std::string& pivot, std::uint64_t /*seed*/,
                               const Lexicon& lexicon, const std::string& source_lang) {
  if (s.empty()) return {s, translator.id(), pivot};
  const auto text = detokenize(s);
  const auto forward = translator.translate(text, source_lang, pivot);
  std::string back;
  try {
    back = translator.translate(forward, pivot, source_lang);
  } catch (const TransportError& e) {
    // Surface the source sentence, not the pivot-language intermediate.
    throw TransportError(e.what(), text);
  }
  return {tokenize(back, lexicon), translator.id(), pivot};
}

TextAugResult augment_text(const TokenSeq& s, TextAugKind kind, std::uint64_t seed,
                           const TextAugConfig& config) {
  const auto sub = derive_subseed(seed, to_string(kind));
  const Lexicon& lexicon = config.lexicon ? *config.lexicon : Lexicon::defaults();
  switch (kind) {
    case TextAugKind::kSynonymReplacement: {
      const Thesaurus& th = config.thesaurus ? *config.thesaurus : Thesaurus::defaults();
      return {synonym_replacement(s, th, config.synonym_rate, sub, lexicon), {}, {}};
    }
    case TextAugKind::kArticleRemoval:
      return {article_removal(s), {}, {}};
    case TextAugKind::kBackTranslation: {
      if (config.pivots.empty()) fail(ErrorCode::kInvalidArgument, "no pivot language configured");
      IdentityTranslator identity;
      TranslatorClient& tr = config.translator ? *config.translator : identity;
      Rng rng(sub);
      const auto& pivot = config.pivots[rng.below(config.pivots.size())];
      auto bt = back_translate(s, tr, pivot, sub, lexicon, config.source_lang);
      return {std::move(bt.seq), std::move(bt.translator_id), std::move(bt.pivot)};
    }
    case TextAugKind::kBeVerbError:
      return {be_verb_error(s, sub), {}, {}};
    case TextAugKind::kVerbTenseError:
      return {verb_tense_error(s, sub, lexicon), {}, {}};
    case TextAugKind::kSingularPluralError:
      return {singular_plural_error(s, sub, lexicon), {}, {}};
  }
  fail(ErrorCode::kInvalidArgument, "unknown text augmentation kind");
}

}  // namespace spaug
