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
#include <string>
#include <vector>

#include "nludiag/backend.hpp"
#include "nludiag/error.hpp"
#include "nludiag/metrics.hpp"
#include "nludiag/schema.hpp"

using namespace nludiag;

namespace {

DatasetSplit single_field_split(const std::string& task, const std::string& split,
                                const std::vector<std::pair<std::string, int>>& rows) {
  DatasetSplit out;
  out.task = task;
  out.split = split;
  for (const auto& [text, label] : rows) {
    Record r;
    r["sentence"] = text;
    r["label"] = label;
    out.records.push_back(r);
  }
  return out;
}

DatasetSplit pair_split(const std::string& task, const std::string& split,
                        const std::vector<std::tuple<std::string, std::string, double>>& rows) {
  const TaskSchema& schema = schema_for(task);
  DatasetSplit out;
  out.task = task;
  out.split = split;
  for (const auto& [a, b, label] : rows) {
    Record r;
    r[schema.text_fields[0]] = a;
    r[schema.text_fields[1]] = b;
    if (schema.label_kind == LabelKind::kRegression0To5) {
      r[schema.label_field] = label;
    } else {
      r[schema.label_field] = static_cast<int>(label);
    }
    out.records.push_back(r);
  }
  return out;
}

// A linearly separable toy corpus: polarity rides on one content word.
DatasetSplit toy_sentiment(const std::string& split, int n) {
  std::vector<std::pair<std::string, int>> rows;
  const std::vector<std::string> positive = {"a wonderful film", "truly wonderful acting",
                                             "wonderful and warm story"};
  const std::vector<std::string> negative = {"an awful film", "truly awful acting",
                                             "awful and cold story"};
  for (int i = 0; i < n; ++i) {
    rows.emplace_back(positive[i % positive.size()], 1);
    rows.emplace_back(negative[i % negative.size()], 0);
  }
  return single_field_split("sst-2", split, rows);
}

std::vector<double> gold_labels(const DatasetSplit& split, const TaskSchema& schema) {
  std::vector<double> out;
  for (const Record& r : split.records) out.push_back(label_value(r, schema));
  return out;
}

}  // namespace

TEST_CASE("bow backend learns a separable sentiment corpus") {
  const TaskSchema& schema = schema_for("sst-2");
  const DatasetSplit train = toy_sentiment("train", 30);
  const DatasetSplit dev = toy_sentiment("dev", 5);

  BowBackend backend;
  CHECK(backend.id() == "bow");
  Hyperparams hp;
  auto model = backend.fit(train, schema, hp);
  const std::vector<double> predictions = backend.predict(*model, dev, schema);
  REQUIRE(predictions.size() == dev.records.size());
  for (double p : predictions) {
    CHECK(p == std::floor(p));  // class indices as integral doubles
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
  CHECK(compute_metric(predictions, gold_labels(dev, schema), MetricKind::kAccuracy) ==
        doctest::Approx(100.0));
}

TEST_CASE("bow backend is deterministic for a fixed seed") {
  const TaskSchema& schema = schema_for("sst-2");
  const DatasetSplit train = toy_sentiment("train", 40);
  const DatasetSplit dev = toy_sentiment("dev", 10);

  BowBackend backend;
  Hyperparams hp;
  hp.seed = 11;
  auto first = backend.predict(*backend.fit(train, schema, hp), dev, schema);
  auto second = backend.predict(*backend.fit(train, schema, hp), dev, schema);
  CHECK(first == second);
}

TEST_CASE("bow backend separates three classes by their marker tokens") {
  const TaskSchema& schema = schema_for("mnli-m");
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (int i = 0; i < 24; ++i) {
    rows.emplace_back("the premise text", "clearly entailed conclusion", 0);
    rows.emplace_back("the premise text", "totally neutral statement", 1);
    rows.emplace_back("the premise text", "plainly contradicted claim", 2);
  }
  const DatasetSplit train = pair_split("mnli-m", "train", rows);
  const DatasetSplit dev = pair_split(
      "mnli-m", "dev-matched",
      {{"the premise text", "clearly entailed conclusion", 0},
       {"the premise text", "totally neutral statement", 1},
       {"the premise text", "plainly contradicted claim", 2}});

  BowBackend backend;
  auto model = backend.fit(train, schema, {});
  const auto predictions = backend.predict(*model, dev, schema);
  CHECK(predictions == std::vector<double>{0.0, 1.0, 2.0});
}

TEST_CASE("bow regression scores similarity in [0,5]") {
  const TaskSchema& schema = schema_for("sts-b");
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (int i = 0; i < 10; ++i) {
    rows.emplace_back("the cat sat on the mat", "the cat sat on the mat", 5.0);
    rows.emplace_back("the cat sat on the mat", "quarterly earnings rose sharply", 0.0);
  }
  const DatasetSplit train = pair_split("sts-b", "train", rows);
  const DatasetSplit dev =
      pair_split("sts-b", "dev",
                 {{"identical words here", "identical words here", 5.0},
                  {"alpha beta gamma", "delta epsilon zeta", 0.0},
                  {"shared words plus extra tail", "shared words plus other tail", 3.0}});

  BowBackend backend;
  auto model = backend.fit(train, schema, {});
  const auto predictions = backend.predict(*model, dev, schema);
  REQUIRE(predictions.size() == 3);
  CHECK(predictions[0] == doctest::Approx(5.0));
  CHECK(predictions[1] == doctest::Approx(0.0));
  CHECK(predictions[2] > 0.0);
  CHECK(predictions[2] < 5.0);
}

TEST_CASE("bow backend rejects empty training data and foreign models") {
  const TaskSchema& schema = schema_for("sst-2");
  BowBackend backend;
  DatasetSplit empty;
  empty.task = "sst-2";
  empty.split = "train";
  CHECK_THROWS_AS(backend.fit(empty, schema, {}), Error);

  struct ForeignModel : TrainerBackend::Model {};
  ForeignModel foreign;
  CHECK_THROWS_AS(backend.predict(foreign, toy_sentiment("dev", 2), schema), Error);
}

TEST_CASE("subprocess backend round-trips the documented protocol") {
  // The stub asserts the request envelope, then answers with the gold labels.
  SubprocessBackend backend(
      "python3 -c '\n"
      "import json, sys\n"
      "req = json.load(sys.stdin)\n"
      "assert req[\"version\"] == \"nludiag-backend-v1\", req[\"version\"]\n"
      "assert req[\"task\"] == \"sst-2\"\n"
      "assert req[\"schema\"][\"label_field\"] == \"label\"\n"
      "assert req[\"schema\"][\"metric\"] == \"accuracy\"\n"
      "assert req[\"hyperparams\"][\"epochs\"] == 3\n"
      "assert req[\"hyperparams\"][\"batch_size\"] == 32\n"
      "assert len(req[\"train\"]) == 6\n"
      "print(json.dumps({\"predictions\": [float(r[\"label\"]) for r in req[\"eval\"]]}))\n"
      "'");
  CHECK(backend.id().substr(0, 4) == "cmd:");

  const TaskSchema& schema = schema_for("sst-2");
  const DatasetSplit train = toy_sentiment("train", 3);
  const DatasetSplit dev = toy_sentiment("dev", 2);
  auto model = backend.fit(train, schema, {});
  const auto predictions = backend.predict(*model, dev, schema);
  CHECK(predictions == gold_labels(dev, schema));
}

TEST_CASE("subprocess backend surfaces protocol failures as typed errors") {
  const TaskSchema& schema = schema_for("sst-2");
  const DatasetSplit train = toy_sentiment("train", 2);
  const DatasetSplit dev = toy_sentiment("dev", 1);

  auto run = [&](const std::string& command) {
    SubprocessBackend backend(command);
    auto model = backend.fit(train, schema, {});
    return backend.predict(*model, dev, schema);
  };

  // Declared error payload.
  CHECK_THROWS_WITH_AS(
      run("python3 -c 'import json,sys; sys.stdin.read(); "
          "print(json.dumps({\"error\": \"boom\"}))'"),
      doctest::Contains("boom"), Error);

  // Non-zero exit status.
  CHECK_THROWS_AS(run("cat > /dev/null; exit 3"), Error);

  // Garbage on stdout.
  CHECK_THROWS_AS(run("cat > /dev/null; echo not-json"), Error);

  // Prediction count must match the eval split.
  CHECK_THROWS_WITH_AS(
      run("python3 -c 'import json,sys; sys.stdin.read(); "
          "print(json.dumps({\"predictions\": [1.0, 0.0, 1.0]}))'"),
      doctest::Contains("3 predictions for 2 eval records"), Error);

  // Predictions must be numbers.
  CHECK_THROWS_AS(run("python3 -c 'import json,sys; sys.stdin.read(); "
                      "print(json.dumps({\"predictions\": [\"yes\"]}))'"),
                  Error);

  CHECK_THROWS_AS(SubprocessBackend(""), Error);
}

TEST_CASE("subprocess backend streams payloads larger than the pipe buffer") {
  const TaskSchema& schema = schema_for("sst-2");
  std::vector<std::pair<std::string, int>> rows;
  std::string filler(120, 'x');
  for (int i = 0; i < 3000; ++i) {
    rows.emplace_back(filler + " sample " + std::to_string(i), i % 2);
  }
  const DatasetSplit big = single_field_split("sst-2", "train", rows);

  SubprocessBackend backend(
      "python3 -c 'import json,sys; req = json.load(sys.stdin); "
      "print(json.dumps({\"predictions\": [float(r[\"label\"]) for r in req[\"eval\"]]}))'");
  auto model = backend.fit(big, schema, {});
  const auto predictions = backend.predict(*model, big, schema);
  CHECK(predictions.size() == big.records.size());
  CHECK(compute_metric(predictions, gold_labels(big, schema), MetricKind::kAccuracy) ==
        doctest::Approx(100.0));
}

TEST_CASE("make_backend dispatches on the specifier string") {
  CHECK(make_backend("bow")->id() == "bow");
  CHECK(make_backend("cmd:true")->id() == "cmd:true");
  CHECK_THROWS_AS(make_backend("transformer"), Error);
}
