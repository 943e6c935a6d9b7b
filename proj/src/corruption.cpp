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

#include "nludiag/corruption.hpp"

#include "nludiag/error.hpp"

namespace nludiag {

const std::array<WordClass, kWordClassCount>& all_word_classes() {
  static const std::array<WordClass, kWordClassCount> classes = {
      WordClass::kAdj,  WordClass::kAdv, WordClass::kConj, WordClass::kDet,
      WordClass::kNoun, WordClass::kNum, WordClass::kPron, WordClass::kVerb,
  };
  return classes;
}

std::string_view word_class_name(WordClass word_class) {
  switch (word_class) {
    case WordClass::kAdj: return "adj";
    case WordClass::kAdv: return "adv";
    case WordClass::kConj: return "conj";
    case WordClass::kDet: return "det";
    case WordClass::kNoun: return "noun";
    case WordClass::kNum: return "num";
    case WordClass::kPron: return "pron";
    case WordClass::kVerb: return "verb";
  }
  return "";
}

WordClass word_class_from_name(std::string_view name) {
  std::string lower = ascii_lower(name);
  for (WordClass word_class : all_word_classes()) {
    if (lower == word_class_name(word_class)) return word_class;
  }
  throw Error(ErrorCode::kUsage, "unknown word class: " + std::string(name));
}

Upos to_upos(WordClass word_class) {
  switch (word_class) {
    case WordClass::kAdj: return Upos::kAdj;
    case WordClass::kAdv: return Upos::kAdv;
    case WordClass::kConj: return Upos::kConj;
    case WordClass::kDet: return Upos::kDet;
    case WordClass::kNoun: return Upos::kNoun;
    case WordClass::kNum: return Upos::kNum;
    case WordClass::kPron: return Upos::kPron;
    case WordClass::kVerb: return Upos::kVerb;
  }
  return Upos::kX;
}

std::optional<WordClass> word_class_from_upos(Upos upos) {
  switch (upos) {
    case Upos::kAdj: return WordClass::kAdj;
    case Upos::kAdv: return WordClass::kAdv;
    case Upos::kConj: return WordClass::kConj;
    case Upos::kDet: return WordClass::kDet;
    case Upos::kNoun: return WordClass::kNoun;
    case Upos::kNum: return WordClass::kNum;
    case Upos::kPron: return WordClass::kPron;
    case Upos::kVerb: return WordClass::kVerb;
    default: return std::nullopt;
  }
}

const std::array<CorruptionSetting, kSettingCount>& all_settings() {
  static const std::array<CorruptionSetting, kSettingCount> settings = {
      CorruptionSetting::kCorruptTrain,
      CorruptionSetting::kCorruptTest,
      CorruptionSetting::kCorruptTrainAndTest,
  };
  return settings;
}

std::string_view setting_name(CorruptionSetting setting) {
  switch (setting) {
    case CorruptionSetting::kCorruptTrain: return "corrupt-train";
    case CorruptionSetting::kCorruptTest: return "corrupt-test";
    case CorruptionSetting::kCorruptTrainAndTest: return "corrupt-train-and-test";
  }
  return "";
}

CorruptionSetting setting_from_name(std::string_view name) {
  std::string lower = ascii_lower(name);
  for (CorruptionSetting setting : all_settings()) {
    if (lower == setting_name(setting)) return setting;
  }
  throw Error(ErrorCode::kUsage, "unknown corruption setting: " + std::string(name));
}

std::string corrupted_dataset_name(std::string_view task, WordClass word_class) {
  std::string name(task);
  name.push_back('-');
  name += word_class_name(word_class);
  return name;
}

std::vector<Token> corrupt_tokens(const std::vector<TaggedToken>& tagged, WordClass target) {
  const Upos remove = to_upos(target);
  std::vector<Token> kept;
  kept.reserve(tagged.size());
  for (const TaggedToken& tt : tagged) {
    if (tt.upos != remove) kept.push_back(tt.token);
  }
  return kept;
}

std::string corrupt_text(std::string_view text, WordClass target, const Tagger& tagger) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<TaggedToken> tagged = tagger.tag(tokens);
  return detokenize(corrupt_tokens(tagged, target));
}

Record corrupt_record(const Record& record, const TaskSchema& schema, WordClass target,
                      const Tagger& tagger) {
  Record out = record;
  for (const std::string& field : schema.text_fields) {
    auto it = out.find(field);
    if (it == out.end() || !it->is_string()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "record lacks declared text field '" + field + "'");
    }
    *it = corrupt_text(it->get<std::string>(), target, tagger);
  }
  return out;
}

std::vector<Record> corrupt_split(const std::vector<Record>& records, const TaskSchema& schema,
                                  WordClass target, const Tagger& tagger) {
  std::vector<Record> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out.push_back(corrupt_record(records[i], schema, target, tagger));
    } catch (const Error& e) {
      throw Error(e.code(), "record " + std::to_string(i) + ": " + e.message());
    }
  }
  return out;
}

std::optional<ClozeQueryPair> make_cloze_pair(std::string_view text, WordClass target,
                                              const Tagger& tagger,
                                              std::string_view mask_token) {
  if (mask_token.empty()) {
    throw Error(ErrorCode::kUsage, "mask token must be non-empty");
  }
  std::vector<Token> tokens = tokenize(text);
  std::vector<TaggedToken> tagged = tagger.tag(tokens);
  const Upos remove = to_upos(target);

  std::size_t first = tagged.size();
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (tagged[i].upos == remove) {
      first = i;
      break;
    }
  }
  if (first == tagged.size()) return std::nullopt;

  ClozeQueryPair pair;
  pair.removed_token = tagged[first].token.text;

  std::vector<std::string> original;
  std::vector<std::string> corrupted;
  original.reserve(tagged.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i == first) {
      original.emplace_back(mask_token);
      corrupted.emplace_back(mask_token);
    } else {
      original.push_back(tagged[i].token.text);
      if (tagged[i].upos != remove) corrupted.push_back(tagged[i].token.text);
    }
  }
  pair.masked_original = detokenize(original);
  pair.masked_corrupted = detokenize(corrupted);
  return pair;
}

}  // namespace nludiag
