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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "nludiag/error.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

namespace {

constexpr std::string_view kFormatVersion = "nludiag-perceptron v1";

constexpr const char* kStart1 = "-START-";
constexpr const char* kStart2 = "-START2-";
constexpr const char* kEnd1 = "-END-";
constexpr const char* kEnd2 = "-END2-";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Word normalization used for the context features: hyphenated words,
// four-digit years and other digit-initial tokens collapse onto markers,
// everything else is lowercased.
std::string normalize(std::string_view word) {
  if (word.find('-') != std::string_view::npos && word[0] != '-') return "!HYPHEN";
  if (all_digits(word) && word.size() == 4) return "!YEAR";
  if (!word.empty() && std::isdigit(static_cast<unsigned char>(word[0]))) return "!DIGITS";
  return ascii_lower(word);
}

std::string suffix3(std::string_view s) {
  return std::string(s.size() <= 3 ? s : s.substr(s.size() - 3));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

}  // namespace

PerceptronTagger PerceptronTagger::load(const std::filesystem::path& path) {
  return load(path, UposMap::builtin());
}

PerceptronTagger PerceptronTagger::load(const std::filesystem::path& path, UposMap upos_map) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open tagger weights file: " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kBadFormat, "empty tagger weights file: " + path.string());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kFormatVersion) {
    throw Error(ErrorCode::kBadFormat, "tagger weights version mismatch: got '" + line +
                                           "', expected '" + std::string(kFormatVersion) + "'");
  }

  PerceptronTagger tagger;
  tagger.upos_map_ = std::move(upos_map);
  tagger.model_id_ = path.stem().string();

  auto read_count = [&](const char* section) -> std::size_t {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::kBadFormat, std::string("missing '") + section + "' section");
    }
    auto fields = split_tabs(line);
    std::string head = fields[0];
    auto space = head.find(' ');
    if (space == std::string::npos || head.substr(0, space) != section) {
      throw Error(ErrorCode::kBadFormat, std::string("expected '") + section + " <count>' header");
    }
    return std::stoull(head.substr(space + 1));
  };

  const std::size_t n_classes = read_count("classes");
  tagger.classes_.reserve(n_classes);
  for (std::size_t i = 0; i < n_classes; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kBadFormat, "truncated classes section");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tagger.classes_.push_back(line);
  }
  // Prediction ties break toward the lexicographically larger class name;
  // keeping classes sorted makes that a single ordered scan.
  std::sort(tagger.classes_.begin(), tagger.classes_.end());

  const std::size_t n_tagdict = read_count("tagdict");
  tagger.tagdict_.reserve(n_tagdict);
  for (std::size_t i = 0; i < n_tagdict; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kBadFormat, "truncated tagdict section");
    auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw Error(ErrorCode::kBadFormat, "tagdict line is not 'word<TAB>tag'");
    }
    tagger.tagdict_.emplace(fields[0], fields[1]);
  }

  std::unordered_map<std::string, int> class_index;
  for (std::size_t i = 0; i < tagger.classes_.size(); ++i) {
    class_index.emplace(tagger.classes_[i], static_cast<int>(i));
  }

  const std::size_t n_weights = read_count("weights");
  tagger.weights_.reserve(n_weights);
  for (std::size_t i = 0; i < n_weights; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kBadFormat, "truncated weights section");
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kBadFormat, "weights line is not 'feature<TAB>tag<TAB>weight'");
    }
    auto cls = class_index.find(fields[1]);
    if (cls == class_index.end()) {
      throw Error(ErrorCode::kBadFormat, "weight references unknown class '" + fields[1] + "'");
    }
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), w);
    if (ec != std::errc()) {
      throw Error(ErrorCode::kBadFormat, "bad weight value '" + fields[2] + "'");
    }
    tagger.weights_[fields[0]].emplace_back(cls->second, w);
  }

  tagger.loaded_ = true;
  return tagger;
}

std::string PerceptronTagger::id() const {
  return loaded_ ? "perceptron:" + model_id_ : "perceptron:<unloaded>";
}

std::string PerceptronTagger::predict(
    const std::vector<std::pair<std::string, int>>& features) const {
  std::vector<double> scores(classes_.size(), 0.0);
  for (const auto& [feature, value] : features) {
    auto it = weights_.find(feature);
    if (it == weights_.end() || value == 0) continue;
    for (const auto& [cls, weight] : it->second) scores[cls] += value * weight;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] >= scores[best]) best = i;  // classes_ sorted: ties pick the larger name
  }
  return classes_[best];
}

std::vector<std::string> PerceptronTagger::tag_fine(const std::vector<Token>& tokens) const {
  if (!loaded_) {
    throw Error(ErrorCode::kTaggerNotLoaded, "perceptron tagger has no weights loaded");
  }

  std::vector<std::string> context;
  context.reserve(tokens.size() + 4);
  context.emplace_back(kStart1);
  context.emplace_back(kStart2);
  for (const Token& t : tokens) context.push_back(normalize(t.text));
  context.emplace_back(kEnd1);
  context.emplace_back(kEnd2);

  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  std::string prev = kStart1;
  std::string prev2 = kStart2;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& word = tokens[i].text;
    std::string tag;
    if (auto it = tagdict_.find(word); it != tagdict_.end()) {
      tag = it->second;
    } else {
      const std::size_t c = i + 2;  // context offset past the start markers
      std::vector<std::pair<std::string, int>> features;
      features.reserve(14);
      auto add = [&features](std::initializer_list<std::string_view> parts) {
        std::string joined;
        for (auto part : parts) {
          if (!joined.empty()) joined.push_back(' ');
          joined += part;
        }
        features.emplace_back(std::move(joined), 1);
      };
      add({"bias"});
      add({"i suffix", suffix3(word)});
      add({"i pref1", word.substr(0, 1)});
      add({"i-1 tag", prev});
      add({"i-2 tag", prev2});
      add({"i tag+i-2 tag", prev, prev2});
      add({"i word", context[c]});
      add({"i-1 tag+i word", prev, context[c]});
      add({"i-1 word", context[c - 1]});
      add({"i-1 suffix", suffix3(context[c - 1])});
      add({"i-2 word", context[c - 2]});
      add({"i+1 word", context[c + 1]});
      add({"i+1 suffix", suffix3(context[c + 1])});
      add({"i+2 word", context[c + 2]});
      tag = predict(features);
    }
    tags.push_back(tag);
    prev2 = prev;
    prev = tag;
  }
  return tags;
}

std::vector<TaggedToken> PerceptronTagger::tag(const std::vector<Token>& tokens) const {
  std::vector<std::string> fine = tag_fine(tokens);
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.push_back(TaggedToken{tokens[i], upos_map_.map(fine[i])});
  }
  return out;
}

}  // namespace nludiag
