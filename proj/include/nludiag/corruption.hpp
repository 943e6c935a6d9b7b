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

#ifndef NLUDIAG_CORRUPTION_HPP_
#define NLUDIAG_CORRUPTION_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nludiag/schema.hpp"
#include "nludiag/tagger.hpp"
#include "nludiag/text.hpp"

namespace nludiag {

// The eight legal corruption targets. ADP, PRT, PUNCT and X exist as tags but
// are never removed.
enum class WordClass {
  kAdj,
  kAdv,
  kConj,
  kDet,
  kNoun,
  kNum,
  kPron,
  kVerb,
};

inline constexpr int kWordClassCount = 8;

const std::array<WordClass, kWordClassCount>& all_word_classes();

std::string_view word_class_name(WordClass word_class);  // lowercase, e.g. "noun"
WordClass word_class_from_name(std::string_view name);   // case-insensitive
Upos to_upos(WordClass word_class);
std::optional<WordClass> word_class_from_upos(Upos upos);

// Which splits of a run are corrupted: the training set, the evaluation set,
// or both.
enum class CorruptionSetting {
  kCorruptTrain,
  kCorruptTest,
  kCorruptTrainAndTest,
};

inline constexpr int kSettingCount = 3;

const std::array<CorruptionSetting, kSettingCount>& all_settings();

std::string_view setting_name(CorruptionSetting setting);  // e.g. "corrupt-train"
CorruptionSetting setting_from_name(std::string_view name);

struct CorruptionSpec {
  WordClass word_class;
  CorruptionSetting setting;

  bool operator==(const CorruptionSpec&) const = default;
};

// Directory suffix for corrupted variants: "cola" + NOUN -> "cola-noun".
std::string corrupted_dataset_name(std::string_view task, WordClass word_class);

// Tags are computed once on the full original token sequence; corruption is
// the subsequence whose tags differ from the target, in original order.
std::vector<Token> corrupt_tokens(const std::vector<TaggedToken>& tagged, WordClass target);

// tokenize -> tag -> filter -> detokenize. A sentence consisting entirely of
// the target class yields "".
std::string corrupt_text(std::string_view text, WordClass target, const Tagger& tagger);

// Corrupts every schema text field; the label and any extra fields are
// bit-identical to the input. Throws kSchemaMismatch when a declared text
// field is absent.
Record corrupt_record(const Record& record, const TaskSchema& schema, WordClass target,
                      const Tagger& tagger);

// Same cardinality and order as the input; records whose fields become empty
// are kept. Errors carry the offending record index.
std::vector<Record> corrupt_split(const std::vector<Record>& records, const TaskSchema& schema,
                                  WordClass target, const Tagger& tagger);

// Cloze probe inputs built from one sentence: the original with its first
// target-class token masked, and the corrupted variant where that token is
// masked and every other target-class token is removed.
struct ClozeQueryPair {
  std::string masked_original;
  std::string masked_corrupted;
  std::string removed_token;

  bool operator==(const ClozeQueryPair&) const = default;
};

inline constexpr std::string_view kDefaultMaskToken = "[MASK]";

// NONE when the sentence has no target-class token. mask_token must be
// non-empty.
std::optional<ClozeQueryPair> make_cloze_pair(std::string_view text, WordClass target,
                                              const Tagger& tagger,
                                              std::string_view mask_token = kDefaultMaskToken);

}  // namespace nludiag

#endif  // NLUDIAG_CORRUPTION_HPP_
