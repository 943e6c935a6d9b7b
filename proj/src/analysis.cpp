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

#include "nludiag/analysis.hpp"

#include <cctype>
#include <fstream>

#include "nludiag/error.hpp"
#include "nludiag/text.hpp"

namespace nludiag {

namespace {

std::string pair_key(std::string_view a, std::string_view b) {
  std::string lower_a = ascii_lower(a);
  std::string lower_b = ascii_lower(b);
  if (lower_b < lower_a) lower_a.swap(lower_b);
  return lower_a + '\t' + lower_b;
}

std::vector<std::pair<std::string, std::string>> read_two_columns(
    const std::filesystem::path& path, std::size_t& skipped) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open lexicon " + path.string());
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      ++skipped;
      continue;
    }
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

std::vector<std::string> lower_tokens(std::string_view text) {
  std::vector<std::string> words;
  for (const Token& token : tokenize(text)) words.push_back(ascii_lower(token.text));
  return words;
}

}  // namespace

ParaphraseLexicon ParaphraseLexicon::load(const std::filesystem::path& path,
                                          bool include_identity) {
  ParaphraseLexicon lexicon(include_identity);
  for (const auto& [a, b] : read_two_columns(path, lexicon.skipped_)) lexicon.add(a, b);
  return lexicon;
}

void ParaphraseLexicon::add(std::string_view a, std::string_view b) {
  pairs_.insert(pair_key(a, b));
}

bool ParaphraseLexicon::contains(std::string_view a, std::string_view b) const {
  if (include_identity_ && ascii_lower(a) == ascii_lower(b)) return true;
  return pairs_.count(pair_key(a, b)) > 0;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  SentimentLexicon lexicon;
  for (const auto& [word, polarity] : read_two_columns(path, lexicon.skipped_)) {
    if (polarity != "positive" && polarity != "negative") {
      ++lexicon.skipped_;
      continue;
    }
    lexicon.add(word, polarity);
  }
  return lexicon;
}

void SentimentLexicon::add(std::string_view word, std::string_view polarity) {
  entries_[ascii_lower(word)].insert(std::string(polarity));
}

const std::set<std::string>* SentimentLexicon::find(std::string_view word) const {
  auto it = entries_.find(ascii_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

bool has_lexical_paraphrase(std::string_view sentence_a, std::string_view sentence_b,
                            const ParaphraseLexicon& lexicon) {
  const std::vector<std::string> a = lower_tokens(sentence_a);
  const std::vector<std::string> b = lower_tokens(sentence_b);
  for (const std::string& wa : a) {
    for (const std::string& wb : b) {
      if (lexicon.contains(wa, wb)) return true;
    }
  }
  return false;
}

double paraphrase_retention(const std::vector<std::pair<std::string, std::string>>& correct_pairs,
                            const ParaphraseLexicon& lexicon) {
  if (correct_pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "paraphrase retention over zero pairs");
  }
  std::size_t retained = 0;
  for (const auto& [a, b] : correct_pairs) {
    if (has_lexical_paraphrase(a, b, lexicon)) ++retained;
  }
  return static_cast<double>(retained) / static_cast<double>(correct_pairs.size());
}

std::set<std::string> sentiment_labels(std::string_view text, const SentimentLexicon& lexicon) {
  std::set<std::string> labels;
  for (const std::string& word : lower_tokens(text)) {
    if (const auto* polarities = lexicon.find(word)) {
      labels.insert(polarities->begin(), polarities->end());
    }
  }
  return labels;
}

double sentiment_retention(
    const std::vector<std::pair<std::string, std::string>>& correct_examples,
    const SentimentLexicon& lexicon) {
  if (correct_examples.empty()) {
    throw Error(ErrorCode::kEmptyInput, "sentiment retention over zero examples");
  }
  std::size_t retained = 0;
  for (const auto& [text, gold] : correct_examples) {
    if (sentiment_labels(text, lexicon).count(gold) > 0) ++retained;
  }
  return static_cast<double>(retained) / static_cast<double>(correct_examples.size());
}

std::string_view cloze_variant_name(ClozeVariant variant) {
  return variant == ClozeVariant::kOriginal ? "original" : "corrupted";
}

std::string normalize_cloze_token(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && std::ispunct(static_cast<unsigned char>(token[begin]))) ++begin;
  while (end > begin && std::ispunct(static_cast<unsigned char>(token[end - 1]))) --end;
  return ascii_lower(token.substr(begin, end - begin));
}

AnalysisOutcome masked_prediction_accuracy(const std::vector<std::string>& sentences,
                                           WordClass target, const Tagger& tagger,
                                           MaskedPredictor& predictor, ClozeVariant variant,
                                           std::string_view mask_token) {
  AnalysisOutcome outcome;
  for (const std::string& sentence : sentences) {
    const auto pair = make_cloze_pair(sentence, target, tagger, mask_token);
    if (!pair) continue;
    ++outcome.denominator;
    const std::string& query =
        variant == ClozeVariant::kOriginal ? pair->masked_original : pair->masked_corrupted;
    const std::string predicted = predictor.predict_top1(query);
    if (normalize_cloze_token(predicted) == normalize_cloze_token(pair->removed_token)) {
      ++outcome.numerator;
    }
  }
  if (outcome.denominator == 0) {
    throw Error(ErrorCode::kEmptyInput, "no sentence yields a cloze query for class " +
                                            std::string(word_class_name(target)));
  }
  return outcome;
}

nlohmann::ordered_json analysis_report(std::string_view analysis, std::string_view task,
                                       WordClass word_class,
                                       std::optional<ClozeVariant> variant,
                                       const AnalysisOutcome& outcome) {
  nlohmann::ordered_json report;
  report["analysis"] = std::string(analysis);
  report["task"] = std::string(task);
  report["word_class"] = std::string(word_class_name(word_class));
  report["variant"] = variant ? nlohmann::ordered_json(std::string(cloze_variant_name(*variant)))
                              : nlohmann::ordered_json(nullptr);
  report["numerator"] = outcome.numerator;
  report["denominator"] = outcome.denominator;
  report["fraction"] = outcome.fraction();
  return report;
}

}  // namespace nludiag
