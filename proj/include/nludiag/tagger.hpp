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

#ifndef NLUDIAG_TAGGER_HPP_
#define NLUDIAG_TAGGER_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nludiag/text.hpp"

namespace nludiag {

// Fine-grained (Penn-style) tag -> universal class. Unknown tags map to X.
// The same table ships as data/en-ptb-universal.map so it can be audited or
// replaced; load() reads that two-column "fine<TAB>upos" format.
class UposMap {
 public:
  static const UposMap& builtin();
  static UposMap load(const std::filesystem::path& path);

  Upos map(std::string_view fine_tag) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, Upos> table_;
};

Upos map_to_universal(std::string_view fine_tag);  // via the builtin table

// Taggers are immutable after construction and safe to share across threads.
// Every shipped tagger is deterministic: equal token sequences in, equal tag
// sequences out.
class Tagger {
 public:
  virtual ~Tagger() = default;

  virtual std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const = 0;
  virtual std::string id() const = 0;

  bool deterministic() const { return true; }
};

std::vector<TaggedToken> tag(const std::vector<Token>& tokens, const Tagger& tagger);

// Lexicon + suffix-rule tagger bundled with the library so the test suite and
// demos need no model download. Lookup order: punctuation, digits, embedded
// word list, suffix rules, NOUN fallback.
class RuleTagger : public Tagger {
 public:
  std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const override;
  std::string id() const override { return "rule-lexicon-v1"; }

  static Upos classify(std::string_view word);
};

// Averaged-perceptron tagger. Weight files use the "nludiag-perceptron v1"
// text format (see README); tools/convert_nltk_tagger.py produces them from
// the reference pickled model. Fine tags are reduced to universal classes
// through a UposMap.
class PerceptronTagger : public Tagger {
 public:
  PerceptronTagger() = default;  // unloaded; tag() throws kTaggerNotLoaded

  static PerceptronTagger load(const std::filesystem::path& path);
  static PerceptronTagger load(const std::filesystem::path& path, UposMap upos_map);

  std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const override;
  std::string id() const override;

  bool loaded() const { return loaded_; }

  // Fine-tag pass, exposed so converted models can be checked against the
  // reference tagger output.
  std::vector<std::string> tag_fine(const std::vector<Token>& tokens) const;

 private:
  std::string predict(const std::vector<std::pair<std::string, int>>& features) const;

  bool loaded_ = false;
  std::string model_id_;
  std::vector<std::string> classes_;
  std::unordered_map<std::string, std::string> tagdict_;
  // feature -> sparse (class index, weight) rows
  std::unordered_map<std::string, std::vector<std::pair<int, double>>> weights_;
  UposMap upos_map_;
};

// "rule" or "perceptron:<weights-path>".
std::unique_ptr<Tagger> make_tagger(const std::string& spec);

}  // namespace nludiag

#endif  // NLUDIAG_TAGGER_HPP_
