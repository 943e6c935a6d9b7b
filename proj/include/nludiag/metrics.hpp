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

#ifndef NLUDIAG_METRICS_HPP_
#define NLUDIAG_METRICS_HPP_

#include <vector>

#include "nludiag/schema.hpp"

namespace nludiag {

// Percent-scale score: 100 * (accuracy fraction | Matthews coefficient |
// sample Pearson correlation). Classification inputs hold class indices as
// integral doubles. Degenerate denominators (single-class confusion, zero
// variance) return 0 by contract rather than erroring.
double compute_metric(const std::vector<double>& predictions, const std::vector<double>& golds,
                      MetricKind metric);

double compute_delta(double score, double baseline);

}  // namespace nludiag

#endif  // NLUDIAG_METRICS_HPP_
