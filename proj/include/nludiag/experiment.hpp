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

#ifndef NLUDIAG_EXPERIMENT_HPP_
#define NLUDIAG_EXPERIMENT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nludiag/backend.hpp"
#include "nludiag/corruption.hpp"
#include "nludiag/store.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

// One run: a task, an optional corruption (absent for baselines), and the
// training protocol.
struct ExperimentConfig {
  std::string task;
  std::optional<CorruptionSpec> corruption;
  Hyperparams hyperparams;
  std::string backend_id;

  bool is_baseline() const { return !corruption.has_value(); }

  bool operator==(const ExperimentConfig&) const = default;
};

// Cartesian product of the axes, ordered by task name, then word class, then
// setting. Throws kEmptyAxis when any axis is empty. Duplicate axis entries
// are collapsed.
std::vector<ExperimentConfig> enumerate_configs(std::vector<std::string> tasks,
                                                std::vector<WordClass> classes,
                                                std::vector<CorruptionSetting> settings,
                                                const Hyperparams& hp = {},
                                                const std::string& backend_id = "bow");

struct ExperimentResult {
  ExperimentConfig config;
  double score = 0.0;
  std::optional<double> baseline;
  std::optional<double> delta;
  double wall_time = 0.0;
  std::string completed_at;
};

// Loads the task's train and eval splits from data_root, corrupts the train
// split for CORRUPT_TRAIN / CORRUPT_TRAIN_AND_TEST and the eval split for
// CORRUPT_TEST / CORRUPT_TRAIN_AND_TEST, fits and scores with the schema
// metric, and appends the row to the store before returning. The baseline
// for the delta is looked up in the store by (task, backend, seed).
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& data_root, TrainerBackend& backend,
                                const Tagger& tagger, ResultsStore& store);

// Runs baselines first, then corrupted configs. Configs whose row is already
// in the store with status ok are skipped; failures are recorded in the
// store and do not abort the remaining configs.
std::vector<ExperimentResult> run_matrix(const std::vector<ExperimentConfig>& configs,
                                         const std::filesystem::path& data_root,
                                         TrainerBackend& backend, const Tagger& tagger,
                                         ResultsStore& store);

}  // namespace nludiag

#endif  // NLUDIAG_EXPERIMENT_HPP_
