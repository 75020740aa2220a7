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

#include "spaug/textaug/tokenizer.hpp"

#include <cctype>

#include "common/text_util.hpp"
#include "spaug/common/error.hpp"

namespace spaug {
namespace {

constexpr std::string_view kLeading = "\"'([{";
constexpr std::string_view kTrailing = ".,!?;:\"')]}";
constexpr std::string_view kOpening = "([{";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Token make_token(std::string_view surface, const Lexicon& lexicon) {
  Token t;
  t.surface = std::string(surface);
  if (is_punctuation(surface)) {
    t.pos = PartOfSpeech::kOther;
    t.lemma = t.surface;
    return t;
  }
  const auto r = lexicon.analyze(surface);
  t.pos = r.pos;
  t.lemma = r.lemma;
  return t;
}

TokenSeq tokenize(std::string_view text, const Lexicon& lexicon) {
  if (!detail::valid_utf8(text)) fail(ErrorCode::kInvalidArgument, "sentence is not valid UTF-8");
  if (detail::trim(text).empty()) fail(ErrorCode::kEmptySentence, "sentence is empty");

  TokenSeq seq;
  seq.original_text = std::string(text);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view chunk = text.substr(i, end - i);
    i = end;
    if (chunk.empty()) continue;

    std::vector<std::string_view> tail;
    while (!chunk.empty() && kLeading.find(chunk.front()) != std::string_view::npos &&
           chunk.size() > 1) {
      seq.tokens.push_back(make_token(chunk.substr(0, 1), lexicon));
      chunk.remove_prefix(1);
    }
    while (chunk.size() > 1 && kTrailing.find(chunk.back()) != std::string_view::npos) {
      tail.push_back(chunk.substr(chunk.size() - 1));
      chunk.remove_suffix(1);
    }
    seq.tokens.push_back(make_token(chunk, lexicon));
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      seq.tokens.push_back(make_token(*it, lexicon));
    }
  }
  return seq;
}

std::string detokenize(const TokenSeq& seq) {
  std::string out;
  bool capitalized = false;
  bool open_quote = false;
  bool glue_next = true;
  for (const auto& tok : seq.tokens) {
    const auto& s = tok.surface;
    bool attach = glue_next;
    glue_next = false;
    if (s == "\"") {
      if (!open_quote) {
        glue_next = true;
      } else {
        attach = true;
      }
      open_quote = !open_quote;
    } else if (is_punctuation(s)) {
      if (s.size() == 1 && kOpening.find(s[0]) != std::string_view::npos) {
        glue_next = true;
      } else {
        attach = true;
      }
    }
    if (!attach && !out.empty()) out += ' ';
    if (!capitalized && !s.empty() && std::isalpha(static_cast<unsigned char>(s.front()))) {
      out += with_leading_case(s, true);
      capitalized = true;
    } else {
      out += s;
    }
  }
  return out;
}

}  // namespace spaug
