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

#ifndef NLUDIAG_SCHEMA_HPP_
#define NLUDIAG_SCHEMA_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nludiag {

// A task record is a field-name -> value object. Insertion order is kept so
// files round-trip byte-stably.
using Record = nlohmann::ordered_json;

enum class LabelKind {
  kBinary,         // {0, 1}
  kMulticlass3,    // {0, 1, 2}
  kRegression0To5  // real in [0, 5]
};

enum class MetricKind { kAccuracy, kMatthews, kPearson };

std::string_view label_kind_name(LabelKind kind);
std::string_view metric_name(MetricKind metric);
MetricKind metric_from_name(std::string_view name);

struct TaskSchema {
  std::string name;
  std::vector<std::string> text_fields;  // 1 for single-sentence tasks, 2 for pairs
  std::string label_field;
  LabelKind label_kind;
  MetricKind metric;
  std::string eval_split;  // development split used for scoring
};

// The eight tasks in scope, keyed by lowercase name. WNLI is deliberately
// absent.
const std::map<std::string, TaskSchema>& task_registry();

// Throws kUnknownTask for names outside the registry.
const TaskSchema& schema_for(const std::string& task);

// Accepted source column names per schema field, tried in order. Shipped
// defaults cover the common distribution headers; callers may override.
using FieldMapping = std::map<std::string, std::vector<std::string>>;

FieldMapping default_field_mapping(const TaskSchema& schema);

// Throws kMissingField / kLabelOutOfRange naming the record index.
void validate_record(const Record& record, const TaskSchema& schema, std::size_t index);

double label_value(const Record& record, const TaskSchema& schema);

}  // namespace nludiag

#endif  // NLUDIAG_SCHEMA_HPP_
