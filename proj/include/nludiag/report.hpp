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

#ifndef NLUDIAG_REPORT_HPP_
#define NLUDIAG_REPORT_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nludiag/corruption.hpp"
#include "nludiag/store.hpp"

namespace nludiag {

// Shortest representation that round-trips to the same double; keeps CSVs
// byte-deterministic without re-rounding stored values.
std::string format_double(double value);

struct BaselineRow {
  std::string task;
  MetricKind metric;
  double score;
};

// Last successful baseline per task, sorted by task name. Throws
// kNoBaselines on a store without any.
std::vector<BaselineRow> baseline_table(const ResultsStore& store);

struct DeltaCell {
  std::optional<double> score;
  std::optional<double> delta;
};

// One row per task; cells indexed by setting in declaration order
// (corrupt-train, corrupt-test, corrupt-train-and-test). Cells without a
// stored result stay empty.
struct DeltaTableRow {
  std::string task;
  std::array<DeltaCell, kSettingCount> cells;
};

// Throws kNoResults when the store has no successful run for the class.
std::vector<DeltaTableRow> delta_table(const ResultsStore& store, WordClass word_class);

// Rows are every task the store mentions; columns the classes with results
// for the setting. Missing cells are explicit nulls, never zeros.
struct HeatmapMatrix {
  std::vector<std::string> tasks;
  std::vector<WordClass> classes;
  std::vector<std::vector<std::optional<double>>> cells;  // [task][class] deltas
  CorruptionSetting setting;
};

// Throws kNoResults when the store has no successful run for the setting.
HeatmapMatrix heatmap(const ResultsStore& store, CorruptionSetting setting);

std::string render_baseline_text(const std::vector<BaselineRow>& rows);
std::string render_baseline_csv(const std::vector<BaselineRow>& rows);

std::string render_delta_text(const std::vector<DeltaTableRow>& rows, WordClass word_class);
std::string render_delta_csv(const std::vector<DeltaTableRow>& rows);

std::string render_heatmap_text(const HeatmapMatrix& matrix);
std::string render_heatmap_csv(const HeatmapMatrix& matrix);

// Diverging color scale centered at 0. Bounds are data-driven unless pinned
// to a symmetric +-bound.
void render_heatmap_png(const HeatmapMatrix& matrix, const std::filesystem::path& path,
                        std::optional<double> pinned_bound = std::nullopt);

}  // namespace nludiag

#endif  // NLUDIAG_REPORT_HPP_
