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

#include <cmath>

#include "nludiag/error.hpp"
#include "nludiag/schema.hpp"

namespace nludiag {

std::string_view label_kind_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::kBinary: return "binary";
    case LabelKind::kMulticlass3: return "multiclass-3";
    case LabelKind::kRegression0To5: return "regression-0-5";
  }
  return "";
}

std::string_view metric_name(MetricKind metric) {
  switch (metric) {
    case MetricKind::kAccuracy: return "accuracy";
    case MetricKind::kMatthews: return "matthews";
    case MetricKind::kPearson: return "pearson";
  }
  return "";
}

MetricKind metric_from_name(std::string_view name) {
  if (name == "accuracy") return MetricKind::kAccuracy;
  if (name == "matthews") return MetricKind::kMatthews;
  if (name == "pearson") return MetricKind::kPearson;
  throw Error(ErrorCode::kBadFormat, "unknown metric name: " + std::string(name));
}

const std::map<std::string, TaskSchema>& task_registry() {
  static const std::map<std::string, TaskSchema> registry = {
      {"cola",
       {"cola", {"sentence"}, "label", LabelKind::kBinary, MetricKind::kMatthews, "dev"}},
      {"mnli-m",
       {"mnli-m",
        {"premise", "hypothesis"},
        "label",
        LabelKind::kMulticlass3,
        MetricKind::kAccuracy,
        "dev-matched"}},
      {"mrpc",
       {"mrpc",
        {"sentence1", "sentence2"},
        "label",
        LabelKind::kBinary,
        MetricKind::kAccuracy,
        "dev"}},
      {"qnli",
       {"qnli",
        {"question", "sentence"},
        "label",
        LabelKind::kBinary,
        MetricKind::kAccuracy,
        "dev"}},
      {"qqp",
       {"qqp",
        {"question1", "question2"},
        "label",
        LabelKind::kBinary,
        MetricKind::kAccuracy,
        "dev"}},
      {"rte",
       {"rte",
        {"sentence1", "sentence2"},
        "label",
        LabelKind::kBinary,
        MetricKind::kAccuracy,
        "dev"}},
      {"sst-2",
       {"sst-2", {"sentence"}, "label", LabelKind::kBinary, MetricKind::kAccuracy, "dev"}},
      {"sts-b",
       {"sts-b",
        {"sentence1", "sentence2"},
        "label",
        LabelKind::kRegression0To5,
        MetricKind::kPearson,
        "dev"}},
  };
  return registry;
}

const TaskSchema& schema_for(const std::string& task) {
  const auto& registry = task_registry();
  auto it = registry.find(task);
  if (it == registry.end()) {
    throw Error(ErrorCode::kUnknownTask, "unknown task: " + task);
  }
  return it->second;
}

FieldMapping default_field_mapping(const TaskSchema& schema) {
  FieldMapping mapping;
  for (const std::string& field : schema.text_fields) mapping[field] = {field};
  mapping[schema.label_field] = {schema.label_field};

  // Alternate headers seen across distributions of the same tasks.
  if (schema.name == "mnli-m") {
    mapping["premise"] = {"premise", "sentence1"};
    mapping["hypothesis"] = {"hypothesis", "sentence2"};
  } else if (schema.name == "mrpc") {
    mapping["sentence1"] = {"sentence1", "#1 String"};
    mapping["sentence2"] = {"sentence2", "#2 String"};
    mapping["label"] = {"label", "Quality"};
  } else if (schema.name == "sts-b") {
    mapping["label"] = {"label", "score"};
  } else if (schema.name == "qqp") {
    mapping["label"] = {"label", "is_duplicate"};
  }
  return mapping;
}

namespace {

bool label_in_range(double value, LabelKind kind) {
  switch (kind) {
    case LabelKind::kBinary:
      return value == 0.0 || value == 1.0;
    case LabelKind::kMulticlass3:
      return value == 0.0 || value == 1.0 || value == 2.0;
    case LabelKind::kRegression0To5:
      return std::isfinite(value) && value >= 0.0 && value <= 5.0;
  }
  return false;
}

}  // namespace

void validate_record(const Record& record, const TaskSchema& schema, std::size_t index) {
  for (const std::string& field : schema.text_fields) {
    auto it = record.find(field);
    if (it == record.end() || !it->is_string()) {
      throw Error(ErrorCode::kMissingField, "record " + std::to_string(index) +
                                                ": missing text field '" + field + "'");
    }
  }
  auto label = record.find(schema.label_field);
  if (label == record.end() || !label->is_number()) {
    throw Error(ErrorCode::kMissingField, "record " + std::to_string(index) +
                                              ": missing label field '" + schema.label_field +
                                              "'");
  }
  double value = label->get<double>();
  if (!label_in_range(value, schema.label_kind)) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "record " + std::to_string(index) + ": label " + std::to_string(value) +
                    " outside " + std::string(label_kind_name(schema.label_kind)));
  }
}

double label_value(const Record& record, const TaskSchema& schema) {
  auto it = record.find(schema.label_field);
  if (it == record.end() || !it->is_number()) {
    throw Error(ErrorCode::kMissingField, "missing label field '" + schema.label_field + "'");
  }
  return it->get<double>();
}

}  // namespace nludiag
