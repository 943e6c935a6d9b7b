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

#include <fstream>
#include <sstream>

#include "nludiag/error.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

namespace {

// Penn Treebank tags -> universal classes, after the published en-ptb
// reduction table. Punctuation classes are spelled PUNCT here.
struct FineTagRow {
  const char* fine;
  Upos upos;
};

constexpr FineTagRow kBuiltinRows[] = {
    {"!", Upos::kPunct},     {"#", Upos::kPunct},      {"$", Upos::kPunct},
    {"''", Upos::kPunct},    {"(", Upos::kPunct},      {")", Upos::kPunct},
    {",", Upos::kPunct},     {"-LRB-", Upos::kPunct},  {"-RRB-", Upos::kPunct},
    {".", Upos::kPunct},     {":", Upos::kPunct},      {"?", Upos::kPunct},
    {"``", Upos::kPunct},    {"CC", Upos::kConj},      {"CD", Upos::kNum},
    {"CD|RB", Upos::kX},     {"DT", Upos::kDet},       {"EX", Upos::kDet},
    {"FW", Upos::kX},        {"IN", Upos::kAdp},       {"IN|RP", Upos::kAdp},
    {"JJ", Upos::kAdj},      {"JJR", Upos::kAdj},      {"JJRJR", Upos::kAdj},
    {"JJS", Upos::kAdj},     {"JJ|RB", Upos::kAdj},    {"JJ|VBG", Upos::kAdj},
    {"LS", Upos::kX},        {"MD", Upos::kVerb},      {"NN", Upos::kNoun},
    {"NNP", Upos::kNoun},    {"NNPS", Upos::kNoun},    {"NNS", Upos::kNoun},
    {"NN|NNS", Upos::kNoun}, {"NN|SYM", Upos::kNoun},  {"NN|VBG", Upos::kNoun},
    {"NP", Upos::kNoun},     {"PDT", Upos::kDet},      {"POS", Upos::kPrt},
    {"PRP", Upos::kPron},    {"PRP$", Upos::kPron},    {"PRP|VBP", Upos::kPron},
    {"PRT", Upos::kPrt},     {"RB", Upos::kAdv},       {"RBR", Upos::kAdv},
    {"RBS", Upos::kAdv},     {"RB|RP", Upos::kAdv},    {"RB|VBG", Upos::kAdv},
    {"RN", Upos::kX},        {"RP", Upos::kPrt},       {"SYM", Upos::kX},
    {"TO", Upos::kPrt},      {"UH", Upos::kX},         {"VB", Upos::kVerb},
    {"VBD", Upos::kVerb},    {"VBD|VBN", Upos::kVerb}, {"VBG", Upos::kVerb},
    {"VBG|NN", Upos::kVerb}, {"VBN", Upos::kVerb},     {"VBP", Upos::kVerb},
    {"VBP|TO", Upos::kVerb}, {"VBZ", Upos::kVerb},     {"VP", Upos::kVerb},
    {"WDT", Upos::kDet},     {"WH", Upos::kX},         {"WP", Upos::kPron},
    {"WP$", Upos::kPron},    {"WRB", Upos::kAdv},
};

}  // namespace

const UposMap& UposMap::builtin() {
  static const UposMap instance = [] {
    UposMap m;
    for (const FineTagRow& row : kBuiltinRows) m.table_.emplace(row.fine, row.upos);
    return m;
  }();
  return instance;
}

UposMap UposMap::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open universal mapping file: " + path.string());
  }
  UposMap m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    // '#' opens a comment only without a tab column; "#\tPUNCT" is the PTB
    // pound-sign tag, which is data.
    if (line[0] == '#' && tab == std::string::npos) continue;
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kBadFormat,
                  "mapping line " + std::to_string(line_no) + " is not two tab-separated columns");
    }
    std::string fine = line.substr(0, tab);
    std::string upos_str = line.substr(tab + 1);
    if (!upos_str.empty() && upos_str.back() == '\r') upos_str.pop_back();
    auto upos = upos_from_name(upos_str);
    if (!upos) {
      throw Error(ErrorCode::kBadFormat,
                  "unknown universal class '" + upos_str + "' on line " + std::to_string(line_no));
    }
    m.table_[fine] = *upos;
  }
  return m;
}

Upos UposMap::map(std::string_view fine_tag) const {
  auto it = table_.find(std::string(fine_tag));
  return it == table_.end() ? Upos::kX : it->second;
}

Upos map_to_universal(std::string_view fine_tag) { return UposMap::builtin().map(fine_tag); }

std::vector<TaggedToken> tag(const std::vector<Token>& tokens, const Tagger& tagger) {
  return tagger.tag(tokens);
}

}  // namespace nludiag
