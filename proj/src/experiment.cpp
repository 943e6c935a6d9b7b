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

#include "nludiag/experiment.hpp"

#include <algorithm>
#include <chrono>

#include "nludiag/dataset.hpp"
#include "nludiag/error.hpp"
#include "nludiag/metrics.hpp"

namespace nludiag {

std::vector<ExperimentConfig> enumerate_configs(std::vector<std::string> tasks,
                                                std::vector<WordClass> classes,
                                                std::vector<CorruptionSetting> settings,
                                                const Hyperparams& hp,
                                                const std::string& backend_id) {
  if (tasks.empty()) throw Error(ErrorCode::kEmptyAxis, "task axis is empty");
  if (classes.empty()) throw Error(ErrorCode::kEmptyAxis, "word-class axis is empty");
  if (settings.empty()) throw Error(ErrorCode::kEmptyAxis, "setting axis is empty");

  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());
  auto by_value = [](auto a, auto b) { return static_cast<int>(a) < static_cast<int>(b); };
  std::sort(classes.begin(), classes.end(), by_value);
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::sort(settings.begin(), settings.end(), by_value);
  settings.erase(std::unique(settings.begin(), settings.end()), settings.end());

  std::vector<ExperimentConfig> configs;
  configs.reserve(tasks.size() * classes.size() * settings.size());
  for (const std::string& task : tasks) {
    for (WordClass word_class : classes) {
      for (CorruptionSetting setting : settings) {
        configs.push_back(
            ExperimentConfig{task, CorruptionSpec{word_class, setting}, hp, backend_id});
      }
    }
  }
  return configs;
}

namespace {

ResultRow row_for(const ExperimentConfig& config, MetricKind metric) {
  ResultRow row;
  row.task = config.task;
  if (config.corruption) {
    row.word_class = config.corruption->word_class;
    row.setting = config.corruption->setting;
  }
  row.backend = config.backend_id;
  row.seed = config.hyperparams.seed;
  row.metric = metric;
  return row;
}

bool corrupts_train(CorruptionSetting setting) {
  return setting == CorruptionSetting::kCorruptTrain ||
         setting == CorruptionSetting::kCorruptTrainAndTest;
}

bool corrupts_eval(CorruptionSetting setting) {
  return setting == CorruptionSetting::kCorruptTest ||
         setting == CorruptionSetting::kCorruptTrainAndTest;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& data_root, TrainerBackend& backend,
                                const Tagger& tagger, ResultsStore& store) {
  const TaskSchema& schema = schema_for(config.task);

  DatasetSplit train = load_split_from_root(data_root, config.task, "train");
  DatasetSplit eval = load_split_from_root(data_root, config.task, schema.eval_split);

  if (config.corruption) {
    const WordClass target = config.corruption->word_class;
    if (corrupts_train(config.corruption->setting)) {
      train = corrupt_dataset(train, target, tagger);
    }
    if (corrupts_eval(config.corruption->setting)) {
      eval = corrupt_dataset(eval, target, tagger);
    }
  }

  std::vector<double> golds;
  golds.reserve(eval.records.size());
  for (const Record& record : eval.records) golds.push_back(label_value(record, schema));

  const auto start = std::chrono::steady_clock::now();
  std::vector<double> predictions;
  try {
    auto model = backend.fit(train, schema, config.hyperparams);
    predictions = backend.predict(*model, eval, schema);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kBackendFailure,
                "backend '" + config.backend_id + "' failed: " + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  if (predictions.size() != golds.size()) {
    throw Error(ErrorCode::kBackendFailure,
                "backend '" + config.backend_id + "' returned " +
                    std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(golds.size()) + " eval records");
  }

  ResultRow row = row_for(config, schema.metric);
  row.score = compute_metric(predictions, golds, schema.metric);
  row.wall_time = elapsed.count();
  row.timestamp = utc_timestamp();
  if (config.corruption) {
    row.baseline = store.baseline_score(config.task, config.backend_id, config.hyperparams.seed);
    if (row.baseline) row.delta = compute_delta(*row.score, *row.baseline);
  }
  store.append(row);

  ExperimentResult result;
  result.config = config;
  result.score = *row.score;
  result.baseline = row.baseline;
  result.delta = row.delta;
  result.wall_time = row.wall_time;
  result.completed_at = row.timestamp;
  return result;
}

std::vector<ExperimentResult> run_matrix(const std::vector<ExperimentConfig>& configs,
                                         const std::filesystem::path& data_root,
                                         TrainerBackend& backend, const Tagger& tagger,
                                         ResultsStore& store) {
  // Baselines run first so corrupted results can carry deltas immediately.
  std::vector<const ExperimentConfig*> ordered;
  ordered.reserve(configs.size());
  for (const ExperimentConfig& config : configs) {
    if (config.is_baseline()) ordered.push_back(&config);
  }
  for (const ExperimentConfig& config : configs) {
    if (!config.is_baseline()) ordered.push_back(&config);
  }

  std::vector<ExperimentResult> results;
  results.reserve(configs.size());
  for (const ExperimentConfig* config : ordered) {
    std::optional<WordClass> word_class;
    std::optional<CorruptionSetting> setting;
    if (config->corruption) {
      word_class = config->corruption->word_class;
      setting = config->corruption->setting;
    }

    if (auto existing = store.find(config->task, word_class, setting, config->backend_id,
                                   config->hyperparams.seed);
        existing && existing->ok() && existing->score) {
      ExperimentResult result;
      result.config = *config;
      result.score = *existing->score;
      result.baseline = existing->baseline;
      result.delta = existing->delta;
      result.wall_time = existing->wall_time;
      result.completed_at = existing->timestamp;
      results.push_back(std::move(result));
      continue;
    }

    try {
      results.push_back(run_experiment(*config, data_root, backend, tagger, store));
    } catch (const Error& e) {
      ResultRow row = row_for(*config, schema_for(config->task).metric);
      row.timestamp = utc_timestamp();
      row.status = "failed";
      row.error = e.what();
      store.append(row);
    }
  }
  return results;
}

}  // namespace nludiag
