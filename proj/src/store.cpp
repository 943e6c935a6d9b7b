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

#include "nludiag/store.hpp"

#include <ctime>
#include <fstream>

#include "nludiag/error.hpp"

namespace nludiag {

namespace {

nlohmann::ordered_json opt_to_json(const std::optional<double>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

std::optional<double> json_to_opt(const nlohmann::ordered_json& value) {
  if (value.is_null()) return std::nullopt;
  return value.get<double>();
}

}  // namespace

nlohmann::ordered_json ResultRow::to_json() const {
  nlohmann::ordered_json row;
  row["task"] = task;
  row["word_class"] = word_class ? nlohmann::ordered_json(word_class_name(*word_class))
                                 : nlohmann::ordered_json(nullptr);
  row["setting"] =
      setting ? nlohmann::ordered_json(setting_name(*setting)) : nlohmann::ordered_json(nullptr);
  row["backend"] = backend;
  row["seed"] = seed;
  row["metric"] = metric_name(metric);
  row["score"] = opt_to_json(score);
  row["baseline"] = opt_to_json(baseline);
  row["delta"] = opt_to_json(delta);
  row["wall_time"] = wall_time;
  row["timestamp"] = timestamp;
  row["status"] = status;
  if (!error.empty()) row["error"] = error;
  return row;
}

ResultRow ResultRow::from_json(const nlohmann::ordered_json& row) {
  ResultRow out;
  out.task = row.at("task").get<std::string>();
  if (!row.at("word_class").is_null()) {
    out.word_class = word_class_from_name(row.at("word_class").get<std::string>());
  }
  if (!row.at("setting").is_null()) {
    out.setting = setting_from_name(row.at("setting").get<std::string>());
  }
  out.backend = row.at("backend").get<std::string>();
  out.seed = row.at("seed").get<int>();
  out.metric = metric_from_name(row.at("metric").get<std::string>());
  out.score = json_to_opt(row.at("score"));
  out.baseline = json_to_opt(row.at("baseline"));
  out.delta = json_to_opt(row.at("delta"));
  out.wall_time = row.at("wall_time").get<double>();
  out.timestamp = row.at("timestamp").get<std::string>();
  out.status = row.at("status").get<std::string>();
  if (row.contains("error")) out.error = row.at("error").get<std::string>();
  return out;
}

ResultsStore::ResultsStore(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
}

void ResultsStore::append(const ResultRow& row) {
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::kIoError, "cannot append to " + path_.string());
  out << row.to_json().dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "append failed: " + path_.string());
}

std::vector<ResultRow> ResultsStore::rows() const {
  std::vector<ResultRow> rows;
  std::ifstream in(path_);
  if (!in) return rows;  // store not created yet: no rows
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto parsed = nlohmann::ordered_json::parse(line, nullptr, false);
    if (parsed.is_discarded()) {
      throw Error(ErrorCode::kBadFormat,
                  path_.string() + ": line " + std::to_string(line_no) + " is not JSON");
    }
    rows.push_back(ResultRow::from_json(parsed));
  }
  return rows;
}

std::optional<ResultRow> ResultsStore::find(const std::string& task,
                                            std::optional<WordClass> word_class,
                                            std::optional<CorruptionSetting> setting,
                                            const std::string& backend, int seed) const {
  std::optional<ResultRow> found;
  for (const ResultRow& row : rows()) {
    if (row.task == task && row.word_class == word_class && row.setting == setting &&
        row.backend == backend && row.seed == seed) {
      found = row;  // last row wins
    }
  }
  return found;
}

std::optional<double> ResultsStore::baseline_score(const std::string& task,
                                                   const std::string& backend, int seed) const {
  auto row = find(task, std::nullopt, std::nullopt, backend, seed);
  if (row && row->ok()) return row->score;
  return std::nullopt;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace nludiag
