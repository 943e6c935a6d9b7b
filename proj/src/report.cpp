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

#include "nludiag/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "nludiag/error.hpp"
#include "nludiag/png.hpp"

namespace nludiag {

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string pad_left(std::string text, std::size_t width) {
  if (text.size() < width) text.insert(0, width - text.size(), ' ');
  return text;
}

int setting_index(CorruptionSetting setting) { return static_cast<int>(setting); }

}  // namespace

std::vector<BaselineRow> baseline_table(const ResultsStore& store) {
  std::map<std::string, BaselineRow> latest;
  for (const ResultRow& row : store.rows()) {
    if (row.is_baseline() && row.ok() && row.score) {
      latest[row.task] = BaselineRow{row.task, row.metric, *row.score};
    }
  }
  if (latest.empty()) {
    throw Error(ErrorCode::kNoBaselines, "store has no successful baseline rows");
  }
  std::vector<BaselineRow> rows;
  rows.reserve(latest.size());
  for (auto& [task, row] : latest) rows.push_back(row);
  return rows;
}

std::vector<DeltaTableRow> delta_table(const ResultsStore& store, WordClass word_class) {
  std::map<std::string, DeltaTableRow> by_task;
  for (const ResultRow& row : store.rows()) {
    if (!row.ok() || !row.score || row.word_class != word_class || !row.setting) continue;
    auto [it, inserted] = by_task.try_emplace(row.task);
    it->second.task = row.task;
    DeltaCell& cell = it->second.cells[static_cast<std::size_t>(setting_index(*row.setting))];
    cell.score = row.score;
    cell.delta = row.delta;
  }
  if (by_task.empty()) {
    throw Error(ErrorCode::kNoResults, "store has no successful runs for class " +
                                           std::string(word_class_name(word_class)));
  }
  std::vector<DeltaTableRow> rows;
  rows.reserve(by_task.size());
  for (auto& [task, row] : by_task) rows.push_back(std::move(row));
  return rows;
}

HeatmapMatrix heatmap(const ResultsStore& store, CorruptionSetting setting) {
  std::set<std::string> tasks;
  std::set<int> class_values;
  std::map<std::pair<std::string, int>, std::optional<double>> deltas;

  for (const ResultRow& row : store.rows()) {
    tasks.insert(row.task);
    if (!row.ok() || !row.score || !row.word_class || row.setting != setting) continue;
    const int cls = static_cast<int>(*row.word_class);
    class_values.insert(cls);
    deltas[{row.task, cls}] = row.delta;
  }
  if (class_values.empty()) {
    throw Error(ErrorCode::kNoResults, "store has no successful runs for setting " +
                                           std::string(setting_name(setting)));
  }

  HeatmapMatrix matrix;
  matrix.setting = setting;
  matrix.tasks.assign(tasks.begin(), tasks.end());
  for (int cls : class_values) matrix.classes.push_back(static_cast<WordClass>(cls));

  matrix.cells.resize(matrix.tasks.size());
  for (std::size_t r = 0; r < matrix.tasks.size(); ++r) {
    matrix.cells[r].resize(matrix.classes.size());
    for (std::size_t c = 0; c < matrix.classes.size(); ++c) {
      auto it = deltas.find({matrix.tasks[r], static_cast<int>(matrix.classes[c])});
      if (it != deltas.end()) matrix.cells[r][c] = it->second;
    }
  }
  return matrix;
}

std::string render_baseline_text(const std::vector<BaselineRow>& rows) {
  std::size_t task_width = 4;
  for (const BaselineRow& row : rows) task_width = std::max(task_width, row.task.size());

  std::string out = pad("task", task_width) + "  " + pad("metric", 9) + "  score\n";
  for (const BaselineRow& row : rows) {
    out += pad(row.task, task_width) + "  " + pad(std::string(metric_name(row.metric)), 9) +
           "  " + pad_left(fixed2(row.score), 6) + "\n";
  }
  return out;
}

std::string render_baseline_csv(const std::vector<BaselineRow>& rows) {
  std::string out = "task,metric,score\n";
  for (const BaselineRow& row : rows) {
    out += row.task + "," + std::string(metric_name(row.metric)) + "," +
           format_double(row.score) + "\n";
  }
  return out;
}

std::string render_delta_text(const std::vector<DeltaTableRow>& rows, WordClass word_class) {
  std::size_t task_width = 4;
  for (const DeltaTableRow& row : rows) task_width = std::max(task_width, row.task.size());

  std::string out = "word class: " + std::string(word_class_name(word_class)) + "\n";
  out += pad("task", task_width);
  for (CorruptionSetting setting : all_settings()) {
    out += "  " + pad_left(std::string(setting_name(setting)), 22) + "  " + pad_left("delta", 7);
  }
  out += "\n";
  for (const DeltaTableRow& row : rows) {
    out += pad(row.task, task_width);
    for (const DeltaCell& cell : row.cells) {
      out += "  " + pad_left(cell.score ? fixed2(*cell.score) : "-", 22) + "  " +
             pad_left(cell.delta ? fixed2(*cell.delta) : "-", 7);
    }
    out += "\n";
  }
  return out;
}

std::string render_delta_csv(const std::vector<DeltaTableRow>& rows) {
  std::string out = "task";
  for (CorruptionSetting setting : all_settings()) {
    const std::string name(setting_name(setting));
    out += "," + name + "-score," + name + "-delta";
  }
  out += "\n";
  for (const DeltaTableRow& row : rows) {
    out += row.task;
    for (const DeltaCell& cell : row.cells) {
      out += ",";
      if (cell.score) out += format_double(*cell.score);
      out += ",";
      if (cell.delta) out += format_double(*cell.delta);
    }
    out += "\n";
  }
  return out;
}

std::string render_heatmap_text(const HeatmapMatrix& matrix) {
  std::size_t task_width = 4;
  for (const std::string& task : matrix.tasks) task_width = std::max(task_width, task.size());

  std::string out = "setting: " + std::string(setting_name(matrix.setting)) + "\n";
  out += pad("task", task_width);
  for (WordClass cls : matrix.classes) {
    out += "  " + pad_left(std::string(word_class_name(cls)), 7);
  }
  out += "\n";
  for (std::size_t r = 0; r < matrix.tasks.size(); ++r) {
    out += pad(matrix.tasks[r], task_width);
    for (const auto& cell : matrix.cells[r]) {
      out += "  " + pad_left(cell ? fixed2(*cell) : "-", 7);
    }
    out += "\n";
  }
  return out;
}

std::string render_heatmap_csv(const HeatmapMatrix& matrix) {
  std::string out = "task";
  for (WordClass cls : matrix.classes) out += "," + std::string(word_class_name(cls));
  out += "\n";
  for (std::size_t r = 0; r < matrix.tasks.size(); ++r) {
    out += matrix.tasks[r];
    for (const auto& cell : matrix.cells[r]) {
      out += ",";
      if (cell) out += format_double(*cell);
    }
    out += "\n";
  }
  return out;
}

namespace {

struct Rgb {
  std::uint8_t r, g, b;
};

// White at 0, saturating red for negative deltas and blue for positive.
Rgb diverging_color(double value, double bound) {
  const double t = bound == 0.0 ? 0.0 : std::min(std::abs(value) / bound, 1.0);
  auto mix = [t](int from, int to) {
    return static_cast<std::uint8_t>(std::lround(from + t * (to - from)));
  };
  if (value < 0.0) return {mix(255, 178), mix(255, 24), mix(255, 43)};
  return {mix(255, 33), mix(255, 102), mix(255, 172)};
}

}  // namespace

void render_heatmap_png(const HeatmapMatrix& matrix, const std::filesystem::path& path,
                        std::optional<double> pinned_bound) {
  constexpr int kScale = 2;
  constexpr int kCellW = 72;
  constexpr int kCellH = 40;
  constexpr int kPad = 8;

  double bound = 0.0;
  if (pinned_bound) {
    bound = std::abs(*pinned_bound);
  } else {
    for (const auto& row : matrix.cells) {
      for (const auto& cell : row) {
        if (cell) bound = std::max(bound, std::abs(*cell));
      }
    }
  }

  int task_label_w = 0;
  for (const std::string& task : matrix.tasks) {
    task_label_w = std::max(task_label_w, Canvas::text_width(task, kScale));
  }
  const std::string title = "delta " + std::string(setting_name(matrix.setting));

  const int grid_x = kPad + task_label_w + kPad;
  const int title_h = Canvas::text_height(kScale) + kPad;
  const int header_h = Canvas::text_height(kScale) + kPad;
  const int grid_y = kPad + title_h + header_h;
  const int legend_h = Canvas::text_height(kScale) + 3 * kPad;
  const int width = grid_x + static_cast<int>(matrix.classes.size()) * kCellW + kPad;
  const int height =
      grid_y + static_cast<int>(matrix.tasks.size()) * kCellH + legend_h + kPad;

  Canvas canvas(width, height);
  canvas.draw_text(kPad, kPad, title, kScale, 0, 0, 0);

  for (std::size_t c = 0; c < matrix.classes.size(); ++c) {
    const std::string label(word_class_name(matrix.classes[c]));
    const int x = grid_x + static_cast<int>(c) * kCellW +
                  (kCellW - Canvas::text_width(label, kScale)) / 2;
    canvas.draw_text(x, kPad + title_h, label, kScale, 0, 0, 0);
  }

  for (std::size_t r = 0; r < matrix.tasks.size(); ++r) {
    const int y = grid_y + static_cast<int>(r) * kCellH;
    canvas.draw_text(kPad, y + (kCellH - Canvas::text_height(kScale)) / 2, matrix.tasks[r],
                     kScale, 0, 0, 0);
    for (std::size_t c = 0; c < matrix.classes.size(); ++c) {
      const int x = grid_x + static_cast<int>(c) * kCellW;
      const auto& cell = matrix.cells[r][c];
      if (cell) {
        const Rgb color = diverging_color(*cell, bound);
        canvas.fill_rect(x, y, kCellW, kCellH, color.r, color.g, color.b);
        const std::string value = fixed2(*cell);
        const Rgb ink = std::abs(*cell) > 0.6 * bound && bound > 0.0 ? Rgb{255, 255, 255}
                                                                     : Rgb{0, 0, 0};
        canvas.draw_text(x + (kCellW - Canvas::text_width(value, 1)) / 2,
                         y + (kCellH - Canvas::text_height(1)) / 2, value, 1, ink.r, ink.g,
                         ink.b);
      } else {
        canvas.fill_rect(x, y, kCellW, kCellH, 225, 225, 225);
      }
      // cell border
      canvas.fill_rect(x, y, kCellW, 1, 120, 120, 120);
      canvas.fill_rect(x, y, 1, kCellH, 120, 120, 120);
      canvas.fill_rect(x, y + kCellH - 1, kCellW, 1, 120, 120, 120);
      canvas.fill_rect(x + kCellW - 1, y, 1, kCellH, 120, 120, 120);
    }
  }

  // Legend: gradient bar from -bound to +bound.
  const int legend_y = grid_y + static_cast<int>(matrix.tasks.size()) * kCellH + kPad;
  const int legend_w = std::min(width - 2 * kPad, 7 * kCellW);
  for (int i = 0; i < legend_w; ++i) {
    const double value = bound * (2.0 * i / std::max(legend_w - 1, 1) - 1.0);
    const Rgb color = diverging_color(value, bound);
    canvas.fill_rect(grid_x - task_label_w - kPad + kPad + i, legend_y, 1, kPad, color.r,
                     color.g, color.b);
  }
  canvas.draw_text(kPad, legend_y + kPad + 2, fixed2(-bound), kScale, 0, 0, 0);
  const std::string upper = "+" + fixed2(bound);
  canvas.draw_text(kPad + legend_w - Canvas::text_width(upper, kScale), legend_y + kPad + 2,
                   upper, kScale, 0, 0, 0);

  write_png(path, canvas);
}

}  // namespace nludiag
