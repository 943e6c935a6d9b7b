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

#ifndef NLUDIAG_ANALYSIS_HPP_
#define NLUDIAG_ANALYSIS_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nludiag/corruption.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

// Unordered pairs of lowercase unigrams. When include_identity is set, a
// word counts as its own paraphrase even without an explicit (w, w) entry;
// the default counts only listed pairs.
class ParaphraseLexicon {
 public:
  explicit ParaphraseLexicon(bool include_identity = false)
      : include_identity_(include_identity) {}

  // Two-column "word<TAB>word" lines; malformed lines are skipped and
  // counted.
  static ParaphraseLexicon load(const std::filesystem::path& path,
                                bool include_identity = false);

  void add(std::string_view a, std::string_view b);
  bool contains(std::string_view a, std::string_view b) const;

  bool include_identity() const { return include_identity_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t skipped_lines() const { return skipped_; }

 private:
  std::unordered_set<std::string> pairs_;  // "min\tmax" keys
  std::size_t skipped_ = 0;
  bool include_identity_ = false;
};

// word -> non-empty subset of {"positive", "negative"}.
class SentimentLexicon {
 public:
  // "word<TAB>polarity" lines; polarities outside the two keys and malformed
  // lines are skipped and counted.
  static SentimentLexicon load(const std::filesystem::path& path);

  void add(std::string_view word, std::string_view polarity);
  const std::set<std::string>* find(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t skipped_lines() const { return skipped_; }

 private:
  std::unordered_map<std::string, std::set<std::string>> entries_;
  std::size_t skipped_ = 0;
};

// True iff some token of a and some token of b (lowercased) form a lexicon
// pair. Symmetric in its two sentences.
bool has_lexical_paraphrase(std::string_view sentence_a, std::string_view sentence_b,
                            const ParaphraseLexicon& lexicon);

// Fraction of correctly-predicted pairs still containing a lexical
// paraphrase. Throws kEmptyInput on an empty list.
double paraphrase_retention(const std::vector<std::pair<std::string, std::string>>& correct_pairs,
                            const ParaphraseLexicon& lexicon);

// Union of the polarity sets of all tokens found in the lexicon.
std::set<std::string> sentiment_labels(std::string_view text, const SentimentLexicon& lexicon);

// Fraction of correctly-predicted examples whose gold polarity survives in
// the text. Throws kEmptyInput on an empty list.
double sentiment_retention(
    const std::vector<std::pair<std::string, std::string>>& correct_examples,
    const SentimentLexicon& lexicon);

// Single-mask fill-in predictor; the input contains the mask placeholder
// exactly once.
class MaskedPredictor {
 public:
  virtual ~MaskedPredictor() = default;

  virtual std::string predict_top1(const std::string& masked_text) = 0;
  virtual std::string id() const = 0;
};

enum class ClozeVariant { kOriginal, kCorrupted };

std::string_view cloze_variant_name(ClozeVariant variant);

// Lowercase + strip surrounding punctuation; the equality test behind cloze
// scoring.
std::string normalize_cloze_token(std::string_view token);

struct AnalysisOutcome {
  std::size_t numerator = 0;
  std::size_t denominator = 0;

  double fraction() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

// Over all sentences yielding a cloze pair, the fraction where the
// predictor's top-1 fill of the chosen variant equals the removed token
// after normalization. Sentences without a target-class token are excluded
// from the denominator; an empty denominator throws kEmptyInput.
AnalysisOutcome masked_prediction_accuracy(const std::vector<std::string>& sentences,
                                           WordClass target, const Tagger& tagger,
                                           MaskedPredictor& predictor, ClozeVariant variant,
                                           std::string_view mask_token = kDefaultMaskToken);

// {analysis, task, word_class, variant|null, numerator, denominator,
// fraction} rendering shared by the analysis subcommands.
nlohmann::ordered_json analysis_report(std::string_view analysis, std::string_view task,
                                       WordClass word_class,
                                       std::optional<ClozeVariant> variant,
                                       const AnalysisOutcome& outcome);

}  // namespace nludiag

#endif  // NLUDIAG_ANALYSIS_HPP_
