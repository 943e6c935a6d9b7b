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

#include "nludiag/metrics.hpp"

#include <cmath>

#include "nludiag/error.hpp"

namespace nludiag {

namespace {

double accuracy(const std::vector<double>& predictions, const std::vector<double>& golds) {
  std::size_t correct = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] == golds[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(predictions.size());
}

// Matthews coefficient from the 2x2 confusion matrix; values other than 1
// count as the negative class.
double matthews(const std::vector<double>& predictions, const std::vector<double>& golds) {
  double tp = 0, tn = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool p = predictions[i] == 1.0;
    const bool g = golds[i] == 1.0;
    if (p && g) ++tp;
    else if (!p && !g) ++tn;
    else if (p && !g) ++fp;
    else ++fn;
  }
  const double denom = std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
  if (denom == 0.0) return 0.0;
  return (tp * tn - fp * fn) / denom;
}

double pearson(const std::vector<double>& predictions, const std::vector<double>& golds) {
  const std::size_t n = predictions.size();
  double mean_p = 0.0, mean_g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_p += predictions[i];
    mean_g += golds[i];
  }
  mean_p /= static_cast<double>(n);
  mean_g /= static_cast<double>(n);

  double cov = 0.0, var_p = 0.0, var_g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dp = predictions[i] - mean_p;
    const double dg = golds[i] - mean_g;
    cov += dp * dg;
    var_p += dp * dp;
    var_g += dg * dg;
  }
  const double denom = std::sqrt(var_p) * std::sqrt(var_g);
  if (denom == 0.0) return 0.0;
  return cov / denom;
}

}  // namespace

double compute_metric(const std::vector<double>& predictions, const std::vector<double>& golds,
                      MetricKind metric) {
  if (predictions.empty() || golds.empty()) {
    throw Error(ErrorCode::kEmptyInput, "metric over empty prediction/gold vectors");
  }
  if (predictions.size() != golds.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predictions (" + std::to_string(predictions.size()) + ") vs golds (" +
                    std::to_string(golds.size()) + ")");
  }
  switch (metric) {
    case MetricKind::kAccuracy: return 100.0 * accuracy(predictions, golds);
    case MetricKind::kMatthews: return 100.0 * matthews(predictions, golds);
    case MetricKind::kPearson: return 100.0 * pearson(predictions, golds);
  }
  return 0.0;
}

double compute_delta(double score, double baseline) { return score - baseline; }

}  // namespace nludiag
