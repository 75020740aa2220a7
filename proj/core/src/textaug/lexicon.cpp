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

#include "spaug/textaug/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "common/text_util.hpp"
#include "spaug/common/error.hpp"
#include "spaug/common/log.hpp"

namespace spaug {

extern const char* const kEmbeddedLexicon;

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

int vowel_groups(std::string_view w) {
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Monosyllabic consonant-vowel-consonant ending ("stop", "run").
bool cvc_ending(std::string_view w) {
  const auto n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  if (is_vowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  return is_vowel(w[n - 2]) && !is_vowel(w[n - 3]) && vowel_groups(w) == 1;
}

bool sibilant_ending(std::string_view w) {
  return ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
         ends_with(w, "sh");
}

bool consonant_y(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]);
}

constexpr std::string_view kFormKeys[] = {"3sg", "past", "pp", "ger"};

}  // namespace

std::string regular_plural(std::string_view w) {
  std::string s(w);
  if (consonant_y(s)) return s.substr(0, s.size() - 1) + "ies";
  if (sibilant_ending(s)) return s + "es";
  return s + "s";
}

std::string regular_singular(std::string_view w) {
  std::string s(w);
  if (s.size() > 3 && ends_with(s, "ies")) return s.substr(0, s.size() - 3) + "y";
  if (ends_with(s, "sses") || ends_with(s, "xes") || ends_with(s, "zes") ||
      ends_with(s, "ches") || ends_with(s, "shes")) {
    return s.substr(0, s.size() - 2);
  }
  if (s.size() > 1 && s.back() == 's' && !ends_with(s, "ss")) return s.substr(0, s.size() - 1);
  return s;
}

Conjugation regular_conjugation(std::string_view lemma) {
  const std::string w(lemma);
  Conjugation c;
  c.base = w;

  if (consonant_y(w)) {
    c.third_singular = w.substr(0, w.size() - 1) + "ies";
  } else if (sibilant_ending(w) || (w.size() >= 2 && w.back() == 'o' && !is_vowel(w[w.size() - 2]))) {
    c.third_singular = w + "es";
  } else {
    c.third_singular = w + "s";
  }

  const bool dbl = cvc_ending(w);
  if (w.back() == 'e') {
    c.past = w + "d";
  } else if (consonant_y(w)) {
    c.past = w.substr(0, w.size() - 1) + "ied";
  } else if (dbl) {
    c.past = w + w.back() + "ed";
  } else {
    c.past = w + "ed";
  }
  c.past_participle = c.past;

  if (ends_with(w, "ie")) {
    c.gerund = w.substr(0, w.size() - 2) + "ying";
  } else if (w.size() > 2 && w.back() == 'e' && !ends_with(w, "ee") && !ends_with(w, "ye") &&
             !ends_with(w, "oe")) {
    c.gerund = w.substr(0, w.size() - 1) + "ing";
  } else if (dbl) {
    c.gerund = w + w.back() + "ing";
  } else {
    c.gerund = w + "ing";
  }
  return c;
}

std::string guess_verb_lemma(std::string_view form, VerbForm kind) {
  std::string w(form);
  std::string stem;
  switch (kind) {
    case VerbForm::kBase:
      return w;
    case VerbForm::kThirdSingular:
      return regular_singular(w);
    case VerbForm::kGerund:
      if (!ends_with(w, "ing") || w.size() < 5) return w;
      stem = w.substr(0, w.size() - 3);
      break;
    case VerbForm::kPast:
    case VerbForm::kPastParticiple:
      if (!ends_with(w, "ed") || w.size() < 4) return w;
      if (ends_with(w, "ied")) return w.substr(0, w.size() - 3) + "y";
      stem = w.substr(0, w.size() - 2);
      break;
  }
  const auto n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) &&
      std::string_view("lsfz").find(stem[n - 1]) == std::string_view::npos) {
    return stem.substr(0, n - 1);
  }
  if (cvc_ending(stem) || stem.back() == 'v' || stem.back() == 'c') return stem + "e";
  return stem;
}

const std::string& Conjugation::form(VerbForm f) const noexcept {
  switch (f) {
    case VerbForm::kBase: return base;
    case VerbForm::kThirdSingular: return third_singular;
    case VerbForm::kPast: return past;
    case VerbForm::kPastParticiple: return past_participle;
    case VerbForm::kGerund: return gerund;
  }
  return base;
}

std::vector<std::string> Conjugation::distinct_forms() const {
  std::vector<std::string> out;
  for (const auto* f : {&base, &third_singular, &past, &past_participle, &gerund}) {
    if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
  }
  return out;
}

// ---------------------------------------------------------------------------

const Lexicon& Lexicon::defaults() {
  static const Lexicon lexicon = parse(kEmbeddedLexicon);
  return lexicon;
}

std::string_view Lexicon::default_text() noexcept { return kEmbeddedLexicon; }

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open lexicon file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  detail::for_each_line(text, [&](int line_no, std::string_view raw) {
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto where = "lexicon line " + std::to_string(line_no) + ": ";
    const auto cols = detail::split(line, '\t');
    if (cols.size() < 2 || cols.size() > 4) {
      fail(ErrorCode::kSchema, where + "expected 2 to 4 tab-separated columns");
    }
    Row row;
    row.word = to_lower(detail::trim(cols[0]));
    if (row.word.empty()) fail(ErrorCode::kSchema, where + "empty word");
    for (auto tag : detail::split(cols[1], ',')) {
      const auto pos = parse_part_of_speech(detail::trim(tag));
      if (!pos) fail(ErrorCode::kSchema, where + "unknown pos tag '" + std::string(tag) + "'");
      if (std::find(row.tags.begin(), row.tags.end(), *pos) == row.tags.end()) {
        row.tags.push_back(*pos);
      }
    }
    row.lemma = row.word;
    if (cols.size() >= 3) {
      const auto lemma = detail::trim(cols[2]);
      if (!lemma.empty() && lemma != "-") row.lemma = to_lower(lemma);
    }
    bool invariant = false;
    if (cols.size() == 4 && detail::trim(cols[3]) != "-") {
      for (auto item : detail::split(cols[3], ',')) {
        item = detail::trim(item);
        if (item.empty()) continue;
        if (item == "invariant") {
          invariant = true;
          continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
          fail(ErrorCode::kSchema, where + "inflection '" + std::string(item) + "' lacks '='");
        }
        const auto key = item.substr(0, eq);
        const auto value = to_lower(detail::trim(item.substr(eq + 1)));
        if (value.empty()) fail(ErrorCode::kSchema, where + "empty inflection value");
        if (key == "pl") {
          row.plural = value;
          continue;
        }
        const auto it = std::find(std::begin(kFormKeys), std::end(kFormKeys), key);
        if (it == std::end(kFormKeys)) {
          fail(ErrorCode::kSchema, where + "unknown inflection key '" + std::string(key) + "'");
        }
        row.forms[it - std::begin(kFormKeys)] = value;
      }
    }
    if (!invariant) {
      for (const auto& f : row.forms) {
        if (f && *f == row.lemma) {
          fail(ErrorCode::kSchema, where + "form '" + *f + "' equals the lemma; mark the row invariant");
        }
      }
    }
    if (lex.row_by_word_.count(row.word)) {
      fail(ErrorCode::kSchema, where + "duplicate entry '" + row.word + "'");
    }
    lex.row_by_word_.emplace(row.word, lex.rows_.size());
    lex.rows_.push_back(std::move(row));
  });
  lex.build_index();
  return lex;
}

void Lexicon::add_reading(const std::string& surface, Reading r) {
  auto& readings = index_[surface];
  for (const auto& existing : readings) {
    if (existing.pos == r.pos) return;
  }
  readings.push_back(std::move(r));
}

void Lexicon::build_index() {
  // Explicit rows first so they outrank derived forms.
  for (const auto& row : rows_) {
    for (auto tag : row.tags) {
      Reading r;
      r.pos = tag;
      r.lemma = row.lemma;
      if (tag == PartOfSpeech::kNoun && row.lemma != row.word) r.number = NounNumber::kPlural;
      if (tag == PartOfSpeech::kVerb && row.lemma != row.word) {
        const auto conj = conjugate(row.lemma);
        r.form = VerbForm::kPast;
        for (auto f : {VerbForm::kThirdSingular, VerbForm::kPast, VerbForm::kPastParticiple,
                       VerbForm::kGerund}) {
          if (conj.form(f) == row.word) {
            r.form = f;
            break;
          }
        }
      }
      if (tag != PartOfSpeech::kNoun && tag != PartOfSpeech::kVerb) r.lemma = row.word;
      add_reading(row.word, std::move(r));
    }
  }
  for (const auto& row : rows_) {
    if (row.lemma != row.word) continue;
    const bool noun = std::find(row.tags.begin(), row.tags.end(), PartOfSpeech::kNoun) != row.tags.end();
    const bool verb = std::find(row.tags.begin(), row.tags.end(), PartOfSpeech::kVerb) != row.tags.end();
    if (noun && !(row.plural && *row.plural == "-")) {
      const auto pl = row.plural ? *row.plural : regular_plural(row.word);
      if (pl != row.word) add_reading(pl, {PartOfSpeech::kNoun, row.word, NounNumber::kPlural, VerbForm::kBase});
    }
    if (verb) {
      const auto conj = conjugate(row.word);
      for (auto f : {VerbForm::kThirdSingular, VerbForm::kPast, VerbForm::kPastParticiple,
                     VerbForm::kGerund}) {
        if (conj.form(f) != row.word) {
          add_reading(conj.form(f), {PartOfSpeech::kVerb, row.word, NounNumber::kSingular, f});
        }
      }
    }
  }
}

const std::vector<Reading>* Lexicon::lookup(std::string_view lower) const {
  const auto it = index_.find(std::string(lower));
  return it == index_.end() || it->second.empty() ? nullptr : &it->second;
}

Reading Lexicon::analyze(std::string_view word) const {
  const auto lower = to_lower(word);
  if (is_article(lower)) return {PartOfSpeech::kArticle, lower};
  if (is_be_verb(lower)) return {PartOfSpeech::kBeVerb, "be"};
  if (const auto* readings = lookup(lower)) {
    // be_verb is reserved for the fixed set above.
    for (const auto& r : *readings) {
      if (r.pos != PartOfSpeech::kBeVerb) return r;
    }
  }
  if (!is_alpha_word(lower)) return {PartOfSpeech::kOther, lower};

  Reading r;
  const auto n = lower.size();
  if (n >= 5 && ends_with(lower, "ing")) {
    r = {PartOfSpeech::kVerb, guess_verb_lemma(lower, VerbForm::kGerund), NounNumber::kSingular,
         VerbForm::kGerund};
  } else if (n >= 4 && ends_with(lower, "ed")) {
    r = {PartOfSpeech::kVerb, guess_verb_lemma(lower, VerbForm::kPast), NounNumber::kSingular,
         VerbForm::kPast};
  } else if (n >= 4 && ends_with(lower, "ly")) {
    r = {PartOfSpeech::kOther, lower};
  } else if (n >= 4 && lower.back() == 's' && !ends_with(lower, "ss") && !ends_with(lower, "us") &&
             !ends_with(lower, "is")) {
    r = {PartOfSpeech::kNoun, regular_singular(lower), NounNumber::kPlural, VerbForm::kBase};
  } else {
    r = {PartOfSpeech::kNoun, lower, NounNumber::kSingular, VerbForm::kBase};
  }
  log_info("lexicon: '" + lower + "' not found; suffix rules tag it " +
           std::string(to_string(r.pos)) + " with lemma '" + r.lemma + "'");
  return r;
}

bool Lexicon::is_uncountable(std::string_view lemma) const {
  const auto it = row_by_word_.find(std::string(lemma));
  return it != row_by_word_.end() && rows_[it->second].plural &&
         *rows_[it->second].plural == "-";
}

std::string Lexicon::pluralize(std::string_view singular) const {
  const std::string w(singular);
  const auto it = row_by_word_.find(w);
  if (it != row_by_word_.end()) {
    const auto& row = rows_[it->second];
    if (row.plural) return *row.plural == "-" ? w : *row.plural;
    return regular_plural(w);
  }
  log_info("lexicon: no noun entry for '" + w + "'; using regular plural");
  return regular_plural(w);
}

std::string Lexicon::singularize(std::string_view plural) const {
  const std::string w(plural);
  if (const auto* readings = lookup(w)) {
    for (const auto& r : *readings) {
      if (r.pos == PartOfSpeech::kNoun) return r.number == NounNumber::kPlural ? r.lemma : w;
    }
  }
  log_info("lexicon: no noun entry for '" + w + "'; using regular singular");
  return regular_singular(w);
}

Conjugation Lexicon::conjugate(std::string_view lemma) const {
  const std::string w(lemma);
  auto conj = regular_conjugation(w);
  const auto it = row_by_word_.find(w);
  if (it == row_by_word_.end()) {
    log_info("lexicon: no conjugation row for '" + w + "'; using regular rules");
    return conj;
  }
  const auto& row = rows_[it->second];
  std::string* targets[] = {&conj.third_singular, &conj.past, &conj.past_participle, &conj.gerund};
  for (int i = 0; i < 4; ++i) {
    if (row.forms[i]) *targets[i] = *row.forms[i];
  }
  // An explicit past without an explicit participle carries over.
  if (row.forms[1] && !row.forms[2]) conj.past_participle = *row.forms[1];
  return conj;
}

std::vector<std::string> Lexicon::regular_nouns() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    if (row.lemma != row.word || row.plural) continue;
    if (std::find(row.tags.begin(), row.tags.end(), PartOfSpeech::kNoun) != row.tags.end()) {
      out.push_back(row.word);
    }
  }
  return out;
}

std::vector<std::string> Lexicon::verb_lemmas() const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    if (row.lemma != row.word) continue;
    if (std::find(row.tags.begin(), row.tags.end(), PartOfSpeech::kVerb) != row.tags.end()) {
      out.push_back(row.word);
    }
  }
  return out;
}

}  // namespace spaug
