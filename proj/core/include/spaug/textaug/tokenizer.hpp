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

#include <string>
#include <string_view>

#include "spaug/textaug/lexicon.hpp"
#include "spaug/textaug/token.hpp"

namespace spaug {

/// Splits on whitespace, peels leading/trailing punctuation into separate
/// `other` tokens and tags each word with the lexicon.
/// Throws kEmptySentence for blank input and kInvalidArgument for malformed UTF-8.
TokenSeq tokenize(std::string_view text, const Lexicon& lexicon = Lexicon::defaults());

/// Single-space join, punctuation attached to its neighbour, first
/// alphabetic token capitalized.
std::string detokenize(const TokenSeq& seq);

/// Tags one surface form.
Token make_token(std::string_view surface, const Lexicon& lexicon = Lexicon::defaults());

}  // namespace spaug
