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

#ifndef NLUDIAG_STORE_HPP_
#define NLUDIAG_STORE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nludiag/corruption.hpp"
#include "nludiag/schema.hpp"

namespace nludiag {

// One results-store line. word_class and setting are empty for baseline
// runs; score is empty for failed runs.
struct ResultRow {
  std::string task;
  std::optional<WordClass> word_class;
  std::optional<CorruptionSetting> setting;
  std::string backend;
  int seed = 0;
  MetricKind metric = MetricKind::kAccuracy;
  std::optional<double> score;
  std::optional<double> baseline;
  std::optional<double> delta;
  double wall_time = 0.0;
  std::string timestamp;  // ISO 8601 UTC
  std::string status = "ok";
  std::string error;  // set when status == "failed"

  bool ok() const { return status == "ok"; }
  bool is_baseline() const { return !word_class.has_value(); }

  nlohmann::ordered_json to_json() const;
  static ResultRow from_json(const nlohmann::ordered_json& row);
};

// Append-only JSONL store. Rows are re-read from disk on demand so separate
// processes sharing the file observe each other's appends; for lookups the
// last row per (task, word_class, setting, backend, seed) wins, which is
// what makes reruns resumable.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path path);

  void append(const ResultRow& row);

  std::vector<ResultRow> rows() const;

  std::optional<ResultRow> find(const std::string& task, std::optional<WordClass> word_class,
                                std::optional<CorruptionSetting> setting,
                                const std::string& backend, int seed) const;

  // Last successful baseline score for the task, regardless of backend/seed
  // when those are not supplied.
  std::optional<double> baseline_score(const std::string& task, const std::string& backend,
                                       int seed) const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string utc_timestamp();

}  // namespace nludiag

#endif  // NLUDIAG_STORE_HPP_
