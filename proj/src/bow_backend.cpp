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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_map>

#include "nludiag/backend.hpp"
#include "nludiag/error.hpp"
#include "nludiag/text.hpp"

namespace nludiag {

namespace {

constexpr std::size_t kHashBits = 18;
constexpr std::size_t kDim = std::size_t{1} << kHashBits;  // +1 bias slot appended

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Sparse token counts hashed into kDim buckets, field-prefixed so the same
// word in sentence1 and sentence2 stays distinguishable. Index kDim is the
// always-on bias.
std::unordered_map<std::size_t, double> featurize(const Record& record,
                                                  const TaskSchema& schema) {
  std::unordered_map<std::size_t, double> features;
  for (std::size_t f = 0; f < schema.text_fields.size(); ++f) {
    const std::string text = record.at(schema.text_fields[f]).get<std::string>();
    const std::string prefix = "f" + std::to_string(f) + ":";
    for (const Token& token : tokenize(text)) {
      features[fnv1a(prefix + ascii_lower(token.text)) & (kDim - 1)] += 1.0;
    }
  }
  features[kDim] += 1.0;
  return features;
}

int num_classes(LabelKind kind) { return kind == LabelKind::kMulticlass3 ? 3 : 2; }

// Averaged multiclass perceptron. Updates are +-1 on mistakes, so the result
// is invariant to learning-rate scale; epochs and seed come from the
// hyperparameters.
class PerceptronModel : public TrainerBackend::Model {
 public:
  PerceptronModel(const DatasetSplit& train, const TaskSchema& schema, const Hyperparams& hp) {
    const int classes = num_classes(schema.label_kind);
    weights_.assign(static_cast<std::size_t>(classes), std::vector<double>(kDim + 1, 0.0));
    std::vector<std::vector<double>> totals = weights_;
    std::vector<std::vector<std::int64_t>> stamps(
        static_cast<std::size_t>(classes), std::vector<std::int64_t>(kDim + 1, 0));

    std::vector<std::unordered_map<std::size_t, double>> features;
    std::vector<int> labels;
    features.reserve(train.records.size());
    for (const Record& record : train.records) {
      features.push_back(featurize(record, schema));
      labels.push_back(static_cast<int>(label_value(record, schema)));
    }

    std::vector<std::size_t> order(train.records.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(static_cast<std::uint32_t>(hp.seed));

    std::int64_t t = 1;
    auto touch = [&](int cls, std::size_t idx, double delta) {
      auto c = static_cast<std::size_t>(cls);
      totals[c][idx] += static_cast<double>(t - stamps[c][idx]) * weights_[c][idx];
      stamps[c][idx] = t;
      weights_[c][idx] += delta;
    };

    for (int epoch = 0; epoch < hp.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i : order) {
        const int predicted = argmax(features[i]);
        if (predicted != labels[i]) {
          for (const auto& [idx, value] : features[i]) {
            touch(labels[i], idx, value);
            touch(predicted, idx, -value);
          }
        }
        ++t;
      }
    }

    for (std::size_t c = 0; c < weights_.size(); ++c) {
      for (std::size_t idx = 0; idx <= kDim; ++idx) {
        totals[c][idx] += static_cast<double>(t - stamps[c][idx]) * weights_[c][idx];
        weights_[c][idx] = totals[c][idx] / static_cast<double>(t);
      }
    }
  }

  int argmax(const std::unordered_map<std::size_t, double>& features) const {
    int best = 0;
    double best_score = score(0, features);
    for (int c = 1; c < static_cast<int>(weights_.size()); ++c) {
      const double s = score(c, features);
      if (s > best_score) {
        best_score = s;
        best = c;
      }
    }
    return best;
  }

  std::vector<double> predict(const DatasetSplit& eval, const TaskSchema& schema) const {
    std::vector<double> predictions;
    predictions.reserve(eval.records.size());
    for (const Record& record : eval.records) {
      predictions.push_back(static_cast<double>(argmax(featurize(record, schema))));
    }
    return predictions;
  }

 private:
  double score(int cls, const std::unordered_map<std::size_t, double>& features) const {
    double total = 0.0;
    for (const auto& [idx, value] : features) total += weights_[static_cast<std::size_t>(cls)][idx] * value;
    return total;
  }

  std::vector<std::vector<double>> weights_;
};

// Similarity regressor: cosine between TF-IDF vectors of the two text fields,
// scaled onto the [0, 5] label range. Document frequencies come from the
// training texts.
class TfidfModel : public TrainerBackend::Model {
 public:
  TfidfModel(const DatasetSplit& train, const TaskSchema& schema) {
    for (const Record& record : train.records) {
      for (const std::string& field : schema.text_fields) {
        std::unordered_map<std::string, int> seen;
        for (const Token& token : tokenize(record.at(field).get<std::string>())) {
          seen[ascii_lower(token.text)] = 1;
        }
        for (const auto& [word, one] : seen) df_[word] += one;
        ++documents_;
      }
    }
  }

  std::vector<double> predict(const DatasetSplit& eval, const TaskSchema& schema) const {
    if (schema.text_fields.size() != 2) {
      throw Error(ErrorCode::kSchemaMismatch, "similarity regression needs a text-pair task");
    }
    std::vector<double> predictions;
    predictions.reserve(eval.records.size());
    for (const Record& record : eval.records) {
      const auto a = vectorize(record.at(schema.text_fields[0]).get<std::string>());
      const auto b = vectorize(record.at(schema.text_fields[1]).get<std::string>());
      predictions.push_back(std::clamp(5.0 * cosine(a, b), 0.0, 5.0));
    }
    return predictions;
  }

 private:
  std::unordered_map<std::string, double> vectorize(const std::string& text) const {
    std::unordered_map<std::string, double> tf;
    for (const Token& token : tokenize(text)) tf[ascii_lower(token.text)] += 1.0;
    for (auto& [word, value] : tf) {
      const auto it = df_.find(word);
      const double df = it == df_.end() ? 0.0 : static_cast<double>(it->second);
      value *= std::log((1.0 + static_cast<double>(documents_)) / (1.0 + df)) + 1.0;
    }
    return tf;
  }

  static double cosine(const std::unordered_map<std::string, double>& a,
                       const std::unordered_map<std::string, double>& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [word, value] : a) {
      na += value * value;
      if (auto it = b.find(word); it != b.end()) dot += value * it->second;
    }
    for (const auto& [word, value] : b) nb += value * value;
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
  }

  std::unordered_map<std::string, int> df_;
  std::size_t documents_ = 0;
};

}  // namespace

std::unique_ptr<TrainerBackend::Model> BowBackend::fit(const DatasetSplit& train,
                                                       const TaskSchema& schema,
                                                       const Hyperparams& hp) {
  if (train.records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "empty training split for task " + schema.name);
  }
  if (schema.label_kind == LabelKind::kRegression0To5) {
    return std::make_unique<TfidfModel>(train, schema);
  }
  return std::make_unique<PerceptronModel>(train, schema, hp);
}

std::vector<double> BowBackend::predict(Model& model, const DatasetSplit& eval,
                                        const TaskSchema& schema) {
  if (auto* tfidf = dynamic_cast<TfidfModel*>(&model)) return tfidf->predict(eval, schema);
  if (auto* perceptron = dynamic_cast<PerceptronModel*>(&model)) {
    return perceptron->predict(eval, schema);
  }
  throw Error(ErrorCode::kBackendFailure, "model was not produced by this backend");
}

std::unique_ptr<TrainerBackend> make_backend(const std::string& spec) {
  if (spec == "bow") return std::make_unique<BowBackend>();
  if (spec.rfind("cmd:", 0) == 0) return std::make_unique<SubprocessBackend>(spec.substr(4));
  throw Error(ErrorCode::kUsage, "unknown backend spec: " + spec + " (use bow or cmd:<command>)");
}

}  // namespace nludiag
