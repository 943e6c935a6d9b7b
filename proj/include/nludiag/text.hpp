// Copyright 2026 The nludiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLUDIAG_TEXT_HPP_
#define NLUDIAG_TEXT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nludiag {

// Universal POS tagset. The first eight values are the removable word classes.
enum class Upos {
  kAdj,
  kAdv,
  kConj,
  kDet,
  kNoun,
  kNum,
  kPron,
  kVerb,
  kAdp,
  kPrt,
  kPunct,
  kX,
};

inline constexpr int kUposCount = 12;

const char* upos_name(Upos tag);  // "ADJ", "NOUN", ...
std::optional<Upos> upos_from_name(std::string_view name);  // case-insensitive

struct Token {
  std::string text;  // non-empty, no internal whitespace
  int index = 0;     // 0-based position in the sentence

  bool operator==(const Token&) const = default;
};

struct TaggedToken {
  Token token;
  Upos upos = Upos::kX;

  bool operator==(const TaggedToken&) const = default;
};

// Whitespace tokenization with two refinements: trailing comma-like
// punctuation (",", ";", ":") is split off anywhere, and one terminal mark
// (".", "!", "?") is split off the final chunk. Intra-word hyphens and
// abbreviation periods ("audience-abuse", "Inc.") stay inside their token.
std::vector<Token> tokenize(std::string_view text);

// Joins tokens with single spaces, then re-attaches single-character
// punctuation tokens (".", "!", "?", ",", ";", ":") to the preceding token.
// A standalone hyphen keeps its surrounding spaces.
std::string detokenize(const std::vector<Token>& tokens);
std::string detokenize(const std::vector<std::string>& token_texts);

// ASCII-only helpers used across the corruption and analysis code.
std::string ascii_lower(std::string_view s);
bool is_punctuation_token(std::string_view s);

}  // namespace nludiag

#endif  // NLUDIAG_TEXT_HPP_
