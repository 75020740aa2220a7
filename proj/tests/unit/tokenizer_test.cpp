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

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "spaug/textaug/tokenizer.hpp"

namespace spaug {
namespace {

std::vector<std::string> surfaces(const TokenSeq& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.surface);
  return out;
}

TEST(Tokenizer, CaptionWithFinalPeriod) {
  const auto s = tokenize("A male is wearing an orange hat and glasses.");
  EXPECT_EQ(surfaces(s), (std::vector<std::string>{"A", "male", "is", "wearing", "an", "orange",
                                                   "hat", "and", "glasses", "."}));
  EXPECT_EQ(s.original_text, "A male is wearing an orange hat and glasses.");
  EXPECT_EQ(s.tokens[0].pos, PartOfSpeech::kArticle);
  EXPECT_EQ(s.tokens[2].pos, PartOfSpeech::kBeVerb);
  EXPECT_EQ(s.tokens[3].pos, PartOfSpeech::kVerb);
  EXPECT_EQ(s.tokens[3].lemma, "wear");
  EXPECT_EQ(s.tokens[6].pos, PartOfSpeech::kNoun);
  EXPECT_EQ(s.tokens[8].pos, PartOfSpeech::kNoun);
  EXPECT_EQ(s.tokens[9].pos, PartOfSpeech::kOther);
}

TEST(Tokenizer, EveryBeVerbIsTagged) {
  for (auto b : kBeVerbs) {
    const auto s = tokenize("It " + std::string(b) + " here");
    EXPECT_EQ(s.tokens[1].pos, PartOfSpeech::kBeVerb) << b;
    EXPECT_EQ(s.tokens[1].lemma, "be");
  }
  EXPECT_EQ(tokenize("IS").tokens[0].pos, PartOfSpeech::kBeVerb);
}

TEST(Tokenizer, SingleWord) {
  const auto s = tokenize("dogs");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.tokens[0].pos, PartOfSpeech::kNoun);
  EXPECT_EQ(s.tokens[0].lemma, "dog");
}

TEST(Tokenizer, PunctuationIsPeeled) {
  const auto s = tokenize("  \"Hello,   world!\"  ");
  EXPECT_EQ(surfaces(s), (std::vector<std::string>{"\"", "Hello", ",", "world", "!", "\""}));
}

TEST(Tokenizer, Errors) {
  EXPECT_SPAUG_ERROR(tokenize(""), ErrorCode::kEmptySentence);
  EXPECT_SPAUG_ERROR(tokenize(" \t\n "), ErrorCode::kEmptySentence);
  EXPECT_SPAUG_ERROR(tokenize("bad \xC3\x28 byte"), ErrorCode::kInvalidArgument);
}

TEST(Detokenize, RoundTripsCaptions) {
  for (const char* s : {"A male is wearing an orange hat and glasses.",
                        "A man on a ladder cleans the window of a tall building.",
                        "Two dogs, one brown and one white, run across a field.",
                        "A child's toy sits on the floor!"}) {
    EXPECT_EQ(detokenize(tokenize(s)), s);
  }
  EXPECT_EQ(detokenize(tokenize("  A   dog  runs .  ")), "A dog runs.");
}

TEST(Detokenize, JoinsPunctuationAndCapitalizes) {
  TokenSeq s;
  for (const char* w : {"male", "is", "wearing", "orange", "hat", "and", "glasses", "."}) {
    s.tokens.push_back(make_token(w));
  }
  EXPECT_EQ(detokenize(s), "Male is wearing orange hat and glasses.");
  EXPECT_EQ(detokenize(TokenSeq{}), "");
}

}  // namespace
}  // namespace spaug
