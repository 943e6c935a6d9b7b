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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "nludiag/error.hpp"
#include "nludiag/metrics.hpp"

using namespace nludiag;

namespace {

// Brute-force oracles, written against the textbook formulas rather than the
// production code paths (counts + closed forms in long double).

double oracle_accuracy(const std::vector<double>& p, const std::vector<double>& g) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == g[i]) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(p.size());
}

double oracle_matthews(const std::vector<double>& p, const std::vector<double>& g) {
  long double tp = 0, tn = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool pred = p[i] == 1.0;
    const bool gold = g[i] == 1.0;
    if (pred && gold) ++tp;
    if (!pred && !gold) ++tn;
    if (pred && !gold) ++fp;
    if (!pred && gold) ++fn;
  }
  const long double denom =
      std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
  if (denom == 0.0L) return 0.0;
  return static_cast<double>(100.0L * (tp * tn - fp * fn) / denom);
}

double oracle_pearson(const std::vector<double>& p, const std::vector<double>& g) {
  const long double n = static_cast<long double>(p.size());
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sx += p[i];
    sy += g[i];
    sxx += static_cast<long double>(p[i]) * p[i];
    syy += static_cast<long double>(g[i]) * g[i];
    sxy += static_cast<long double>(p[i]) * g[i];
  }
  const long double vx = n * sxx - sx * sx;
  const long double vy = n * syy - sy * sy;
  if (vx <= 0.0L || vy <= 0.0L) return 0.0;
  return static_cast<double>(100.0L * (n * sxy - sx * sy) / std::sqrt(vx * vy));
}

}  // namespace

TEST_CASE("metric names round-trip") {
  CHECK(metric_from_name(metric_name(MetricKind::kAccuracy)) == MetricKind::kAccuracy);
  CHECK(metric_from_name(metric_name(MetricKind::kMatthews)) == MetricKind::kMatthews);
  CHECK(metric_from_name(metric_name(MetricKind::kPearson)) == MetricKind::kPearson);
  CHECK_THROWS_AS(metric_from_name("f1"), Error);
}

TEST_CASE("accuracy fixture values") {
  CHECK(compute_metric({1, 0, 1, 1}, {1, 0, 0, 1}, MetricKind::kAccuracy) ==
        doctest::Approx(75.0));
  CHECK(compute_metric({2, 1, 0}, {2, 1, 0}, MetricKind::kAccuracy) == doctest::Approx(100.0));
  CHECK(compute_metric({0}, {1}, MetricKind::kAccuracy) == doctest::Approx(0.0));
}

TEST_CASE("matthews fixture: TP2 TN2 FP1 FN1 scores one third") {
  // golds:  1 1 1 0 0 0   preds: 1 1 0 1 0 0
  const double score =
      compute_metric({1, 1, 0, 1, 0, 0}, {1, 1, 1, 0, 0, 0}, MetricKind::kMatthews);
  CHECK(score == doctest::Approx(100.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(score - 33.33) <= 0.01);
}

TEST_CASE("pearson fixture: [1,2,3] vs [1,2,4]") {
  const double score = compute_metric({1, 2, 3}, {1, 2, 4}, MetricKind::kPearson);
  CHECK(std::abs(score - 98.20) <= 0.01);
  CHECK(score == doctest::Approx(100.0 * 3.0 / std::sqrt(2.0 * 14.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("degenerate denominators return zero by contract") {
  // Single-class confusion matrix.
  CHECK(compute_metric({1, 1}, {1, 1}, MetricKind::kMatthews) == 0.0);
  CHECK(compute_metric({0, 0, 0}, {1, 0, 1}, MetricKind::kMatthews) == 0.0);
  // Zero variance on either side.
  CHECK(compute_metric({2, 2, 2}, {1, 2, 3}, MetricKind::kPearson) == 0.0);
  CHECK(compute_metric({1, 2, 3}, {4, 4, 4}, MetricKind::kPearson) == 0.0);
  CHECK(compute_metric({5}, {5}, MetricKind::kPearson) == 0.0);
}

TEST_CASE("empty and mismatched inputs raise typed errors") {
  for (MetricKind metric :
       {MetricKind::kAccuracy, MetricKind::kMatthews, MetricKind::kPearson}) {
    CHECK_THROWS_AS(compute_metric({}, {}, metric), Error);
    try {
      compute_metric({}, {1.0}, metric);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyInput);  // empty wins over mismatch
    }
    try {
      compute_metric({1.0, 0.0}, {1.0}, metric);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kLengthMismatch);
    }
  }
}

TEST_CASE("oracle equivalence on 500 random vectors per metric") {
  std::mt19937 rng(20260815);

  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<double> p(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<double>(rng() % 2);
      g[i] = static_cast<double>(rng() % 2);
    }
    CHECK(std::abs(compute_metric(p, g, MetricKind::kAccuracy) - oracle_accuracy(p, g)) <=
          1e-9);
    CHECK(std::abs(compute_metric(p, g, MetricKind::kMatthews) - oracle_matthews(p, g)) <=
          1e-9);
  }

  // Three-way labels exercise accuracy beyond the binary case.
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<double> p(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<double>(rng() % 3);
      g[i] = static_cast<double>(rng() % 3);
    }
    CHECK(std::abs(compute_metric(p, g, MetricKind::kAccuracy) - oracle_accuracy(p, g)) <=
          1e-9);
  }

  std::uniform_real_distribution<double> real(0.0, 5.0);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<double> p(n), g(n);
    const bool constant_side = round % 25 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = constant_side ? 2.5 : real(rng);
      g[i] = real(rng);
    }
    CHECK(std::abs(compute_metric(p, g, MetricKind::kPearson) - oracle_pearson(p, g)) <= 1e-9);
  }
}

TEST_CASE("delta is score minus baseline") {
  CHECK(compute_delta(39.72, 64.05) == doctest::Approx(-24.33));
  CHECK(compute_delta(50.0, 50.0) == 0.0);
  CHECK(compute_delta(75.5, 50.25) == doctest::Approx(25.25));
}
