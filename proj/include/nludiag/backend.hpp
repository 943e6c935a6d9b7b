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

#ifndef NLUDIAG_BACKEND_HPP_
#define NLUDIAG_BACKEND_HPP_

#include <memory>
#include <string>
#include <vector>

#include "nludiag/dataset.hpp"
#include "nludiag/schema.hpp"

namespace nludiag {

// Fixed fine-tuning protocol; the defaults are the reference configuration
// every experiment uses unless overridden.
struct Hyperparams {
  int epochs = 3;
  int batch_size = 32;
  double learning_rate = 2e-5;
  int seed = 0;

  bool operator==(const Hyperparams&) const = default;
};

// Trainer plug-in: fit() returns an opaque model consumed by predict().
// Predictions align 1:1 with eval records; classification backends emit class
// indices as integral doubles, regression backends reals in [0, 5].
class TrainerBackend {
 public:
  struct Model {
    virtual ~Model() = default;
  };

  virtual ~TrainerBackend() = default;

  virtual std::string id() const = 0;

  virtual std::unique_ptr<Model> fit(const DatasetSplit& train, const TaskSchema& schema,
                                     const Hyperparams& hp) = 0;

  virtual std::vector<double> predict(Model& model, const DatasetSplit& eval,
                                      const TaskSchema& schema) = 0;
};

// Desk-scale surrogate: an averaged multiclass perceptron over hashed
// bag-of-words features for classification, and a TF-IDF cosine similarity
// scaled to [0, 5] for regression. Deterministic for a fixed seed.
class BowBackend : public TrainerBackend {
 public:
  std::string id() const override { return "bow"; }

  std::unique_ptr<Model> fit(const DatasetSplit& train, const TaskSchema& schema,
                             const Hyperparams& hp) override;

  std::vector<double> predict(Model& model, const DatasetSplit& eval,
                              const TaskSchema& schema) override;
};

// Runs `command` through /bin/sh once per experiment, writing one JSON
// request on the child's stdin and reading one JSON response from its
// stdout:
//
//   request:  {"version": "nludiag-backend-v1", "task": ..., "schema": {...},
//              "hyperparams": {...}, "train": [records], "eval": [records]}
//   response: {"predictions": [numbers]} or {"error": "message"}
//
// This is the attachment point for trainers in other languages; see
// tools/hf_backend.py for a reference implementation.
class SubprocessBackend : public TrainerBackend {
 public:
  explicit SubprocessBackend(std::string command);

  std::string id() const override { return "cmd:" + command_; }

  std::unique_ptr<Model> fit(const DatasetSplit& train, const TaskSchema& schema,
                             const Hyperparams& hp) override;

  std::vector<double> predict(Model& model, const DatasetSplit& eval,
                              const TaskSchema& schema) override;

 private:
  std::string command_;
};

inline constexpr std::string_view kBackendProtocolVersion = "nludiag-backend-v1";

// "bow" or "cmd:<shell command>".
std::unique_ptr<TrainerBackend> make_backend(const std::string& spec);

}  // namespace nludiag

#endif  // NLUDIAG_BACKEND_HPP_
