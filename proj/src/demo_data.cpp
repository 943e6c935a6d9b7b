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

#include "nludiag/demo.hpp"

#include <random>
#include <vector>

#include "nludiag/dataset.hpp"
#include "nludiag/error.hpp"
#include "nludiag/text.hpp"

namespace nludiag {

namespace {

// All vocabulary below is covered by the bundled rule tagger (by lexicon
// entry, suffix rule, or the noun default for unknown words).

const std::vector<std::string> kPositiveAdjs = {
    "amazing",   "beautiful", "brilliant",    "charming", "compelling", "delightful",
    "elegant",   "engaging",  "entertaining", "exciting", "funny",      "graceful",
    "wonderful", "honest",    "lovely",       "stunning", "subtle",     "superb",
    "sweet",     "touching",  "vivid",        "warm",     "witty",      "fresh"};

const std::vector<std::string> kNegativeAdjs = {
    "awful",  "awkward",  "bland",   "boring",   "clumsy",    "dreadful", "dull",   "grim",
    "harsh",  "horrible", "lousy",   "mediocre", "humorless", "painful",  "sloppy", "stale",
    "tedious", "terrible", "lifeless", "tragic",  "bitter",    "tired",    "silly",  "cold"};

const std::vector<std::string> kPositiveVerbs = {"loved", "enjoyed", "admired", "adored"};
const std::vector<std::string> kNegativeVerbs = {"hated", "despised", "disliked", "regretted"};

const std::vector<std::string> kNouns = {
    "film",     "movie",   "story",       "script",  "plot",     "cast",   "scene",
    "drama",    "comedy",  "dialogue",    "acting",  "pacing",   "writing", "editing",
    "ending",   "opening", "storytelling", "casting", "lighting", "director", "audience",
    "character", "picture", "sequel",     "premise", "performance"};

const std::vector<std::string> kLinkVerbs = {"is", "was", "feels", "seems", "proves", "becomes"};

const std::vector<std::string> kAdverbs = {"quite",  "really", "very",    "rather",
                                           "truly",  "deeply", "utterly", "simply"};

const std::vector<std::string> kDeterminers = {"the", "a", "this", "every"};

class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  const std::string& pick(const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    return pool[dist(rng_)];
  }

  std::size_t index(std::size_t bound) {
    std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
    return dist(rng_);
  }

 private:
  std::mt19937 rng_;
};

std::string sentiment_sentence(Sampler& sampler, bool positive) {
  const auto& adjs = positive ? kPositiveAdjs : kNegativeAdjs;
  const auto& verbs = positive ? kPositiveVerbs : kNegativeVerbs;

  std::vector<std::string> words;
  switch (sampler.index(5)) {
    case 0:
      words = {sampler.pick(kDeterminers), sampler.pick(kNouns), sampler.pick(kLinkVerbs),
               sampler.pick(kAdverbs), sampler.pick(adjs), "."};
      break;
    case 1:
      words = {"a",
               sampler.pick(adjs),
               sampler.pick(kNouns),
               "with",
               sampler.pick(kDeterminers),
               sampler.pick(adjs),
               sampler.pick(kNouns),
               "."};
      break;
    case 2:
      words = {"i", sampler.pick(verbs), "this", sampler.pick(kNouns), "."};
      break;
    case 3:
      words = {"the",
               sampler.pick(kNouns),
               "of",
               "the",
               sampler.pick(kNouns),
               sampler.pick(kLinkVerbs),
               sampler.pick(adjs),
               "and",
               sampler.pick(adjs),
               "."};
      break;
    default:
      words = {sampler.pick(kAdverbs),           sampler.pick(adjs), sampler.pick(kNouns),
               "but", sampler.pick(kAdverbs), sampler.pick(adjs),
               "."};
      break;
  }
  return detokenize(words);
}

DatasetSplit make_sst2(const std::string& split, std::size_t count, unsigned seed) {
  DatasetSplit dataset;
  dataset.task = "sst-2";
  dataset.split = split;
  Sampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const bool positive = i % 2 == 0;
    Record record;
    record["sentence"] = sentiment_sentence(sampler, positive);
    record["label"] = positive ? 1 : 0;
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

// Unigram swaps that data/paraphrase_sample.tsv lists as paraphrases, so the
// generated positives carry a lexical cue the analysis can detect.
const std::vector<std::pair<std::string, std::string>> kSwaps = {
    {"locate", "find"},   {"film", "movie"},    {"big", "large"},    {"begin", "start"},
    {"speak", "talk"},    {"answer", "response"}, {"story", "tale"}, {"quick", "fast"},
    {"error", "mistake"}, {"aid", "help"}};

std::string mrpc_base(Sampler& sampler, const std::string& keyword) {
  std::vector<std::string> words = {"the",
                                    sampler.pick(kNouns),
                                    "will",
                                    keyword,
                                    "the",
                                    sampler.pick(kNouns),
                                    sampler.pick(kAdverbs),
                                    "."};
  return detokenize(words);
}

DatasetSplit make_mrpc(const std::string& split, std::size_t count, unsigned seed) {
  DatasetSplit dataset;
  dataset.task = "mrpc";
  dataset.split = split;
  Sampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const bool paraphrase = i % 2 == 0;
    const auto& swap = kSwaps[sampler.index(kSwaps.size())];
    Record record;
    if (paraphrase) {
      Sampler left(static_cast<unsigned>(seed + 31 * i));
      Sampler right(static_cast<unsigned>(seed + 31 * i));  // same context, swapped keyword
      record["sentence1"] = mrpc_base(left, swap.first);
      record["sentence2"] = mrpc_base(right, swap.second);
    } else {
      record["sentence1"] = mrpc_base(sampler, swap.first);
      record["sentence2"] = sentiment_sentence(sampler, i % 4 == 1);
    }
    record["label"] = paraphrase ? 1 : 0;
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

DatasetSplit make_stsb(const std::string& split, std::size_t count, unsigned seed) {
  DatasetSplit dataset;
  dataset.task = "sts-b";
  dataset.split = split;
  Sampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::string> words = {"the",
                                      sampler.pick(kNouns),
                                      sampler.pick(kLinkVerbs),
                                      sampler.pick(kAdverbs),
                                      sampler.pick(i % 2 == 0 ? kPositiveAdjs : kNegativeAdjs),
                                      "."};
    std::vector<std::string> other = words;
    // Rewrite 0..4 content positions; similarity label tracks what survives.
    const std::size_t rewrites = sampler.index(5);
    const std::size_t positions[4] = {1, 2, 3, 4};
    for (std::size_t k = 0; k < rewrites; ++k) {
      switch (positions[k]) {
        case 1: other[1] = sampler.pick(kNouns); break;
        case 2: other[2] = sampler.pick(kLinkVerbs); break;
        case 3: other[3] = sampler.pick(kAdverbs); break;
        default: other[4] = sampler.pick(i % 2 == 0 ? kPositiveAdjs : kNegativeAdjs); break;
      }
    }
    Record record;
    record["sentence1"] = detokenize(words);
    record["sentence2"] = detokenize(other);
    record["label"] = 5.0 * (1.0 - static_cast<double>(rewrites) / 5.0);
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

}  // namespace

void write_demo_task(const std::filesystem::path& data_root, const std::string& task,
                     std::size_t train_records, std::size_t dev_records, unsigned seed) {
  DatasetSplit train;
  DatasetSplit dev;
  if (task == "sst-2") {
    train = make_sst2("train", train_records, seed);
    dev = make_sst2("dev", dev_records, seed + 1);
  } else if (task == "mrpc") {
    train = make_mrpc("train", train_records, seed);
    dev = make_mrpc("dev", dev_records, seed + 1);
  } else if (task == "sts-b") {
    train = make_stsb("train", train_records, seed);
    dev = make_stsb("dev", dev_records, seed + 1);
  } else {
    throw Error(ErrorCode::kUnknownTask, "no demo generator for task: " + task);
  }
  const std::filesystem::path dir = split_dir(data_root, task, std::nullopt);
  save_split(train, dir / "train.jsonl");
  save_split(dev, dir / "dev.jsonl");
}

}  // namespace nludiag
