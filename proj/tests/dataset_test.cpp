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

#include <string>
#include <vector>

#include "nludiag/dataset.hpp"
#include "nludiag/demo.hpp"
#include "nludiag/error.hpp"
#include "nludiag/schema.hpp"
#include "nludiag/tagger.hpp"
#include "test_util.hpp"

using namespace nludiag;
using nludiag_test::TempDir;
using nludiag_test::write_file;

TEST_CASE("task registry holds the eight tasks with their metrics") {
  const auto& registry = task_registry();
  CHECK(registry.size() == 8);
  CHECK(registry.count("wnli") == 0);  // excluded by design

  CHECK(schema_for("cola").metric == MetricKind::kMatthews);
  CHECK(schema_for("cola").label_kind == LabelKind::kBinary);
  CHECK(schema_for("cola").text_fields == std::vector<std::string>{"sentence"});

  CHECK(schema_for("mnli-m").label_kind == LabelKind::kMulticlass3);
  CHECK(schema_for("mnli-m").eval_split == "dev-matched");
  CHECK(schema_for("mnli-m").text_fields ==
        std::vector<std::string>{"premise", "hypothesis"});

  CHECK(schema_for("sts-b").metric == MetricKind::kPearson);
  CHECK(schema_for("sts-b").label_kind == LabelKind::kRegression0To5);

  for (const char* task : {"mrpc", "qnli", "qqp", "rte"}) {
    CHECK(schema_for(task).metric == MetricKind::kAccuracy);
    CHECK(schema_for(task).text_fields.size() == 2);
    CHECK(schema_for(task).eval_split == "dev");
  }
  CHECK(schema_for("sst-2").text_fields == std::vector<std::string>{"sentence"});

  CHECK_THROWS_AS(schema_for("wnli"), Error);
  CHECK_THROWS_AS(schema_for("SST-2"), Error);  // names are lowercase keys
}

TEST_CASE("record validation names the offending record") {
  const TaskSchema& cola = schema_for("cola");
  Record good;
  good["sentence"] = "ok";
  good["label"] = 1;
  CHECK_NOTHROW(validate_record(good, cola, 0));
  CHECK(label_value(good, cola) == 1.0);

  Record missing;
  missing["label"] = 1;
  CHECK_THROWS_WITH_AS(validate_record(missing, cola, 4), doctest::Contains("record 4"),
                       Error);

  Record out_of_range;
  out_of_range["sentence"] = "ok";
  out_of_range["label"] = 2;
  CHECK_THROWS_AS(validate_record(out_of_range, cola, 0), Error);

  const TaskSchema& stsb = schema_for("sts-b");
  Record similarity;
  similarity["sentence1"] = "a";
  similarity["sentence2"] = "b";
  similarity["label"] = 3.75;
  CHECK_NOTHROW(validate_record(similarity, stsb, 0));
  CHECK(label_value(similarity, stsb) == doctest::Approx(3.75));
  similarity["label"] = 6.5;
  CHECK_THROWS_AS(validate_record(similarity, stsb, 0), Error);
}

TEST_CASE("TSV and JSONL sources load to identical splits") {
  TempDir tmp;
  const auto tsv = write_file(tmp.path() / "dev.tsv",
                              "sentence\tlabel\n"
                              "the cat sat.\t1\n"
                              "dog ran fast.\t0\n");
  const auto jsonl = write_file(tmp.path() / "dev.jsonl",
                                "{\"sentence\":\"the cat sat.\",\"label\":1}\n"
                                "{\"sentence\":\"dog ran fast.\",\"label\":0}\n");

  const DatasetSplit from_tsv = load_split("sst-2", "dev", tsv);
  const DatasetSplit from_jsonl = load_split("sst-2", "dev", jsonl);
  REQUIRE(from_tsv.records.size() == 2);
  CHECK(from_tsv == from_jsonl);
  CHECK(from_tsv.task == "sst-2");
  CHECK(!from_tsv.provenance.has_value());
}

TEST_CASE("field mapping resolves distribution column headers") {
  TempDir tmp;
  // MRPC ships quality + numbered-string headers.
  const auto tsv = write_file(tmp.path() / "train.tsv",
                              "Quality\t#1 ID\t#2 ID\t#1 String\t#2 String\n"
                              "1\t11\t12\tthe cat sat.\ta cat sat.\n");
  const DatasetSplit split = load_split("mrpc", "train", tsv);
  REQUIRE(split.records.size() == 1);
  CHECK(split.records[0].at("sentence1").get<std::string>() == "the cat sat.");
  CHECK(split.records[0].at("sentence2").get<std::string>() == "a cat sat.");
  CHECK(split.records[0].at("label").get<long long>() == 1);

  // STS-B distributions label the column "score"; it normalizes to "label".
  const auto sts = write_file(tmp.path() / "sts.tsv",
                              "sentence1\tsentence2\tscore\na cat.\tthe cat.\t3.75\n");
  const DatasetSplit sts_split = load_split("sts-b", "train", sts);
  CHECK(sts_split.records[0].at("label").get<double>() == doctest::Approx(3.75));

  // A caller-supplied mapping overrides the defaults.
  const auto odd = write_file(tmp.path() / "odd.tsv", "text\tgold\nhello there.\t1\n");
  FieldMapping mapping = default_field_mapping(schema_for("sst-2"));
  mapping["sentence"] = {"text"};
  mapping["label"] = {"gold"};
  const DatasetSplit custom = load_split("sst-2", "train", odd, mapping);
  CHECK(custom.records[0].at("sentence").get<std::string>() == "hello there.");

  const auto headerless = write_file(tmp.path() / "dev.tsv", "just one column\n");
  CHECK_THROWS_AS(load_split("sst-2", "dev", headerless), Error);
}

TEST_CASE("save_split writes JSONL plus a checksummed manifest") {
  TempDir tmp;
  DatasetSplit split;
  split.task = "cola";
  split.split = "train";
  for (int i = 0; i < 3; ++i) {
    Record r;
    r["sentence"] = "sentence " + std::to_string(i) + ".";
    r["label"] = i % 2;
    split.records.push_back(r);
  }

  const auto path = tmp.path() / "cola" / "train.jsonl";
  save_split(split, path);

  const DatasetSplit back = load_split("cola", "train", path);
  CHECK(back.records == split.records);

  const auto manifest = load_manifest(path);
  CHECK(manifest.at("task") == "cola");
  CHECK(manifest.at("split") == "train");
  CHECK(manifest.at("provenance").is_null());
  CHECK(manifest.at("count") == 3);
  const std::string checksum = manifest.at("checksum").get<std::string>();
  CHECK(checksum.substr(0, 6) == "crc32:");
  CHECK(checksum.size() == 6 + 8);

  // The checksum is over the JSONL bytes: content changes move it.
  split.records[0]["sentence"] = "different.";
  save_split(split, path);
  CHECK(load_manifest(path).at("checksum").get<std::string>() != checksum);

  // Corrupted variants record their word class.
  DatasetSplit noun = split;
  noun.provenance = WordClass::kNoun;
  save_split(noun, tmp.path() / "cola-noun" / "train.jsonl");
  CHECK(load_manifest(tmp.path() / "cola-noun" / "train.jsonl").at("provenance") == "noun");
}

TEST_CASE("data-root layout resolution") {
  TempDir tmp;
  CHECK(split_dir(tmp.path(), "cola", std::nullopt) == tmp.path() / "cola");
  CHECK(split_dir(tmp.path(), "cola", WordClass::kNoun) == tmp.path() / "cola-noun");

  CHECK_THROWS_AS(locate_split_file(tmp.path(), "cola", "train", std::nullopt), Error);

  write_file(tmp.path() / "cola" / "train.tsv", "sentence\tlabel\nhi there.\t1\n");
  CHECK(locate_split_file(tmp.path(), "cola", "train", std::nullopt).extension() == ".tsv");

  // JSONL wins when both exist.
  write_file(tmp.path() / "cola" / "train.jsonl", "{\"sentence\":\"hi there.\",\"label\":1}\n");
  CHECK(locate_split_file(tmp.path(), "cola", "train", std::nullopt).extension() == ".jsonl");

  const DatasetSplit split = load_split_from_root(tmp.path(), "cola", "train");
  CHECK(split.records.size() == 1);
}

TEST_CASE("corrupt_dataset stamps provenance and round-trips through disk") {
  TempDir tmp;
  DatasetSplit split;
  split.task = "sst-2";
  split.split = "dev";
  Record r;
  r["sentence"] = "the cat saw the dog.";
  r["label"] = 1;
  split.records.push_back(r);

  const RuleTagger tagger;
  const DatasetSplit corrupted = corrupt_dataset(split, WordClass::kNoun, tagger);
  CHECK(corrupted.provenance == WordClass::kNoun);
  CHECK(corrupted.records[0].at("sentence").get<std::string>() == "the saw the.");
  CHECK(corrupted.records[0].at("label") == r.at("label"));

  save_split(corrupted, split_dir(tmp.path(), "sst-2", WordClass::kNoun) / "dev.jsonl");
  const DatasetSplit back = load_split_from_root(tmp.path(), "sst-2", "dev", WordClass::kNoun);
  CHECK(back.records == corrupted.records);
  CHECK(back.provenance == WordClass::kNoun);
}

TEST_CASE("demo corpus generator writes balanced loadable splits") {
  TempDir tmp;
  write_demo_task(tmp.path(), "sst-2", 40, 20, 3);
  const DatasetSplit train = load_split_from_root(tmp.path(), "sst-2", "train");
  const DatasetSplit dev = load_split_from_root(tmp.path(), "sst-2", "dev");
  CHECK(train.records.size() == 40);
  CHECK(dev.records.size() == 20);

  int positives = 0;
  for (const Record& r : train.records) positives += r.at("label").get<int>();
  CHECK(positives == 20);  // alternating labels: exactly balanced

  // Generation is seed-deterministic.
  TempDir tmp2;
  write_demo_task(tmp2.path(), "sst-2", 40, 20, 3);
  CHECK(load_split_from_root(tmp2.path(), "sst-2", "train").records == train.records);

  write_demo_task(tmp.path(), "mrpc", 30, 10, 3);
  write_demo_task(tmp.path(), "sts-b", 30, 10, 3);
  CHECK(load_split_from_root(tmp.path(), "mrpc", "train").records.size() == 30);
  const DatasetSplit sts = load_split_from_root(tmp.path(), "sts-b", "dev");
  for (const Record& r : sts.records) {
    const double label = r.at("label").get<double>();
    CHECK(label >= 0.0);
    CHECK(label <= 5.0);
  }
}
