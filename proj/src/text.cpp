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

#include "nludiag/text.hpp"

#include <array>
#include <cctype>

namespace nludiag {

namespace {

constexpr std::array<const char*, kUposCount> kUposNames = {
    "ADJ", "ADV", "CONJ", "DET",  "NOUN", "NUM",
    "PRON", "VERB", "ADP", "PRT", "PUNCT", "X",
};

bool is_terminal_mark(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_comma_like(char c) { return c == ',' || c == ';' || c == ':'; }

// Single-character punctuation tokens that attach to the preceding token.
bool attaches_left(std::string_view tok) {
  return tok.size() == 1 && (is_terminal_mark(tok[0]) || is_comma_like(tok[0]));
}

}  // namespace

const char* upos_name(Upos tag) { return kUposNames[static_cast<int>(tag)]; }

std::optional<Upos> upos_from_name(std::string_view name) {
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (int i = 0; i < kUposCount; ++i) {
    if (upper == kUposNames[i]) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

std::string ascii_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_punctuation_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::ispunct(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view text) {
  // Whitespace split first; punctuation refinement per chunk below.
  std::vector<std::string> chunks;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        chunks.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));

  std::vector<std::string> texts;
  for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
    std::string chunk = chunks[ci];
    std::vector<std::string> tail;  // split-off punctuation, reversed

    // One terminal mark comes off the final chunk only; an abbreviation
    // period inside the sentence ("Inc.") is part of its token.
    if (ci + 1 == chunks.size() && chunk.size() > 1 && is_terminal_mark(chunk.back())) {
      tail.emplace_back(1, chunk.back());
      chunk.pop_back();
    }
    while (chunk.size() > 1 && is_comma_like(chunk.back())) {
      tail.emplace_back(1, chunk.back());
      chunk.pop_back();
    }

    texts.push_back(std::move(chunk));
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) texts.push_back(std::move(*it));
  }

  std::vector<Token> tokens;
  tokens.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    tokens.push_back(Token{std::move(texts[i]), static_cast<int>(i)});
  }
  return tokens;
}

std::string detokenize(const std::vector<std::string>& token_texts) {
  std::string out;
  for (const std::string& tok : token_texts) {
    if (tok.empty()) continue;
    if (!out.empty() && !attaches_left(tok)) out.push_back(' ');
    out += tok;
  }
  return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::vector<std::string> texts;
  texts.reserve(tokens.size());
  for (const Token& t : tokens) texts.push_back(t.text);
  return detokenize(texts);
}

}  // namespace nludiag
