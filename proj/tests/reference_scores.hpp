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

#ifndef NLUDIAG_TESTS_REFERENCE_SCORES_HPP_
#define NLUDIAG_TESTS_REFERENCE_SCORES_HPP_

#include "nludiag/corruption.hpp"
#include "nludiag/schema.hpp"

namespace nludiag_test {

// Published scores from the reference transformer runs. The deltas below are
// the rounded values as printed, so they can drift from score - baseline by
// up to one unit in the last place; replays compare within +-0.01.

struct ReferenceBaseline {
  const char* task;
  nludiag::MetricKind metric;
  double score;
};

constexpr ReferenceBaseline kReferenceBaselines[] = {
    {"cola", nludiag::MetricKind::kMatthews, 64.05},
    {"mnli-m", nludiag::MetricKind::kAccuracy, 87.89},
    {"mrpc", nludiag::MetricKind::kAccuracy, 88.73},
    {"qnli", nludiag::MetricKind::kAccuracy, 92.64},
    {"qqp", nludiag::MetricKind::kAccuracy, 91.32},
    {"rte", nludiag::MetricKind::kAccuracy, 70.04},
    {"sst-2", nludiag::MetricKind::kAccuracy, 94.61},
    {"sts-b", nludiag::MetricKind::kPearson, 90.08},
};

struct ReferenceCorruption {
  const char* task;
  nludiag::WordClass word_class;
  nludiag::CorruptionSetting setting;
  double score;
  double printed_delta;
};

constexpr nludiag::WordClass kNoun = nludiag::WordClass::kNoun;
constexpr nludiag::WordClass kVerb = nludiag::WordClass::kVerb;
constexpr nludiag::CorruptionSetting kTrain = nludiag::CorruptionSetting::kCorruptTrain;
constexpr nludiag::CorruptionSetting kTest = nludiag::CorruptionSetting::kCorruptTest;
constexpr nludiag::CorruptionSetting kBoth = nludiag::CorruptionSetting::kCorruptTrainAndTest;

constexpr ReferenceCorruption kReferenceCorruptions[] = {
    {"cola", kNoun, kTrain, 39.72, -24.34},   {"cola", kNoun, kTest, 17.75, -46.30},
    {"cola", kNoun, kBoth, 34.33, -29.73},    {"mnli-m", kNoun, kTrain, 85.64, -2.24},
    {"mnli-m", kNoun, kTest, 72.85, -15.04},  {"mnli-m", kNoun, kBoth, 77.46, -10.42},
    {"mrpc", kNoun, kTrain, 86.27, -2.45},    {"mrpc", kNoun, kTest, 82.35, -6.37},
    {"mrpc", kNoun, kBoth, 80.15, -8.58},     {"qnli", kNoun, kTrain, 89.13, -3.51},
    {"qnli", kNoun, kTest, 71.02, -21.62},    {"qnli", kNoun, kBoth, 82.02, -10.62},
    {"qqp", kNoun, kTrain, 86.69, -4.63},     {"qqp", kNoun, kTest, 72.57, -18.75},
    {"qqp", kNoun, kBoth, 84.17, -7.16},      {"rte", kNoun, kTrain, 47.29, -22.74},
    {"rte", kNoun, kTest, 53.79, -16.25},     {"rte", kNoun, kBoth, 47.29, -22.74},
    {"sst-2", kNoun, kTrain, 94.04, -0.57},   {"sst-2", kNoun, kTest, 87.27, -7.34},
    {"sst-2", kNoun, kBoth, 88.76, -5.85},    {"sts-b", kNoun, kTrain, 81.67, -8.41},
    {"sts-b", kNoun, kTest, 56.12, -33.96},   {"sts-b", kNoun, kBoth, 63.52, -26.56},
    {"cola", kVerb, kTrain, 23.26, -40.79},   {"cola", kVerb, kTest, 4.30, -59.75},
    {"cola", kVerb, kBoth, 20.22, -43.83},    {"mnli-m", kVerb, kTrain, 86.95, -0.94},
    {"mnli-m", kVerb, kTest, 77.61, -10.28},  {"mnli-m", kVerb, kBoth, 80.32, -7.57},
    {"mrpc", kVerb, kTrain, 85.54, -3.19},    {"mrpc", kVerb, kTest, 85.54, -3.19},
    {"mrpc", kVerb, kBoth, 85.05, -3.68},     {"qnli", kVerb, kTrain, 92.00, -0.64},
    {"qnli", kVerb, kTest, 87.41, -5.24},     {"qnli", kVerb, kBoth, 90.15, -2.49},
    {"qqp", kVerb, kTrain, 89.49, -1.84},     {"qqp", kVerb, kTest, 86.01, -5.31},
    {"qqp", kVerb, kBoth, 89.05, -2.27},      {"rte", kVerb, kTrain, 65.34, -4.69},
    {"rte", kVerb, kTest, 65.70, -4.33},      {"rte", kVerb, kBoth, 65.34, -4.69},
    {"sst-2", kVerb, kTrain, 93.69, -0.92},   {"sst-2", kVerb, kTest, 89.33, -5.28},
    {"sst-2", kVerb, kBoth, 89.56, -5.05},    {"sts-b", kVerb, kTrain, 87.63, -2.46},
    {"sts-b", kVerb, kTest, 85.54, -4.54},    {"sts-b", kVerb, kBoth, 86.22, -3.86},
};

inline double reference_baseline_score(const char* task) {
  for (const ReferenceBaseline& row : kReferenceBaselines) {
    if (std::string_view(row.task) == task) return row.score;
  }
  return 0.0;
}

inline nludiag::MetricKind reference_metric(const char* task) {
  for (const ReferenceBaseline& row : kReferenceBaselines) {
    if (std::string_view(row.task) == task) return row.metric;
  }
  return nludiag::MetricKind::kAccuracy;
}

}  // namespace nludiag_test

#endif  // NLUDIAG_TESTS_REFERENCE_SCORES_HPP_
