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

// Release gate: every numbered criterion below prints one [PASS]/[FAIL]
// line; the process exits non-zero if any fails. Checks are written against
// independent oracles and frozen fixtures, not against the production code's
// own intermediate values.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nludiag/analysis.hpp"
#include "nludiag/corruption.hpp"
#include "nludiag/dataset.hpp"
#include "nludiag/demo.hpp"
#include "nludiag/error.hpp"
#include "nludiag/experiment.hpp"
#include "nludiag/metrics.hpp"
#include "nludiag/report.hpp"
#include "nludiag/store.hpp"
#include "nludiag/tagger.hpp"
#include "nludiag/text.hpp"
#include "reference_scores.hpp"
#include "test_util.hpp"

using namespace nludiag;
using nludiag_test::TempDir;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

template <typename T>
void require_eq(const T& actual, const T& expected, const std::string& what) {
  if (!(actual == expected)) {
    std::ostringstream message;
    message << what << ": got '" << actual << "', expected '" << expected << "'";
    throw CheckFailure(message.str());
  }
}

const RuleTagger kTagger;

std::vector<std::string> texts_of(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

// Independent oracle: keep tokens whose tag on the original sentence differs
// from the target class.
std::vector<std::string> filtered_subsequence(const std::string& text, WordClass target) {
  std::vector<std::string> kept;
  for (const TaggedToken& tt : kTagger.tag(tokenize(text))) {
    if (tt.upos != to_upos(target)) kept.push_back(tt.token.text);
  }
  return kept;
}

std::string fuzz_sentence(std::mt19937& rng) {
  static const std::vector<std::string> vocab = {
      "the",   "a",        "an",    "this",   "cat",   "dog",     "virus", "study",
      "Inc.",  "Easynews", "saw",   "ran",    "was",   "hosted",  "red",   "awful",
      "late",  "quite",    "it",    "they",   "who",   "and",     "but",   "or",
      "in",    "by",       "to",    "of",     "1984",  "42",      "self",  "-",
      "audience-abuse",    "brooding",        "news",  "group",   "big",
  };
  // No '.' or ',' in junk words: standalone punctuation a tokenizer would
  // never emit makes space-joined rendering legitimately lossy.
  static const std::string junk_alphabet = "abcdefghijklmnopqrstuvwxyzXYZ-'0123456789";

  std::string text;
  const int n = 1 + static_cast<int>(rng() % 14);
  for (int i = 0; i < n; ++i) {
    if (i) text += ' ';
    if (rng() % 4 == 0) {
      const int len = 1 + static_cast<int>(rng() % 9);
      std::string word;
      for (int k = 0; k < len; ++k) word += junk_alphabet[rng() % junk_alphabet.size()];
      text += word;
    } else {
      text += vocab[rng() % vocab.size()];
      if (rng() % 7 == 0) text += ',';
    }
  }
  text += (rng() % 3 == 0) ? '!' : '.';
  return text;
}

// Textbook-formula metric oracles in long double.
double oracle_metric(const std::vector<double>& p, const std::vector<double>& g,
                     MetricKind metric) {
  if (metric == MetricKind::kAccuracy) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == g[i]) ++hits;
    }
    return 100.0 * static_cast<double>(hits) / static_cast<double>(p.size());
  }
  if (metric == MetricKind::kMatthews) {
    long double tp = 0, tn = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const bool pred = p[i] == 1.0;
      const bool gold = g[i] == 1.0;
      if (pred && gold) ++tp;
      if (!pred && !gold) ++tn;
      if (pred && !gold) ++fp;
      if (!pred && gold) ++fn;
    }
    const long double denom = std::sqrt((tp + fp) * (tp + fn) * (tn + fp) * (tn + fn));
    return denom == 0.0L ? 0.0 : static_cast<double>(100.0L * (tp * tn - fp * fn) / denom);
  }
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

class RecordingBackend : public TrainerBackend {
 public:
  std::string id() const override { return "recording"; }

  std::unique_ptr<Model> fit(const DatasetSplit& train, const TaskSchema&,
                             const Hyperparams&) override {
    train_calls.push_back(train);
    return std::make_unique<Model>();
  }

  std::vector<double> predict(Model&, const DatasetSplit& eval,
                              const TaskSchema& schema) override {
    eval_calls.push_back(eval);
    std::vector<double> out;
    for (const Record& record : eval.records) out.push_back(label_value(record, schema));
    return out;
  }

  std::vector<DatasetSplit> train_calls;
  std::vector<DatasetSplit> eval_calls;
};

class TablePredictor : public MaskedPredictor {
 public:
  explicit TablePredictor(std::map<std::string, std::string> answers)
      : answers_(std::move(answers)) {}

  std::string predict_top1(const std::string& masked_text) override {
    auto it = answers_.find(masked_text);
    return it == answers_.end() ? "qqqq" : it->second;
  }

  std::string id() const override { return "table"; }

 private:
  std::map<std::string, std::string> answers_;
};

int run_cli(const std::string& args) {
  const std::string command = std::string(NLUDIAG_CLI_PATH) + " " + args;
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// --------------------------------------------------------------------------
// Criteria
// --------------------------------------------------------------------------

void criterion_matrix_cardinality() {
  std::vector<std::string> tasks;
  for (const auto& [task, schema] : task_registry()) tasks.push_back(task);
  require_eq(tasks.size(), std::size_t{8}, "registry task count");

  std::vector<WordClass> classes(all_word_classes().begin(), all_word_classes().end());
  std::vector<CorruptionSetting> settings(all_settings().begin(), all_settings().end());
  const auto configs = enumerate_configs(tasks, classes, settings);
  require_eq(configs.size(), std::size_t{192}, "config count");

  std::set<std::tuple<std::string, int, int>> unique;
  for (const auto& config : configs) {
    require(config.corruption.has_value(), "enumerated config lacks a corruption");
    unique.emplace(config.task, static_cast<int>(config.corruption->word_class),
                   static_cast<int>(config.corruption->setting));
  }
  require_eq(unique.size(), std::size_t{192}, "unique config count");
}

void criterion_corruption_fixtures() {
  require_eq(
      corrupt_text(
          "Easynews Inc. was subpoenaed late last week by the FBI, which was seeking account "
          "information related to the uploading of the virus to the ISP's Usenet news group "
          "server.",
          WordClass::kNoun, kTagger),
      std::string(
          "was subpoenaed late last by the, which was seeking related to the of the to the."),
      "noun-stripped sentence 1");
  require_eq(
      corrupt_text(
          "Easynews Inc. said Monday that it was cooperating with the FBI in trying to locate "
          "the person who uploaded the virus to a Usenet news group hosted by the ISP.",
          WordClass::kNoun, kTagger),
      std::string("said that it was cooperating with the in trying to locate the who uploaded "
                  "the to a hosted by the."),
      "noun-stripped sentence 2");

  const std::string row1 = "An unclassifiably awful study in self - and audience-abuse.";
  require_eq(corrupt_text(row1, WordClass::kNoun, kTagger),
             std::string("An unclassifiably awful in - and."), "review row 1, nouns removed");
  require_eq(corrupt_text(row1, WordClass::kAdj, kTagger),
             std::string("An unclassifiably study in self - and audience-abuse."),
             "review row 1, adjectives removed");

  const std::string row2 =
      "It proves quite compelling as an intense, brooding character study.";
  require_eq(corrupt_text(row2, WordClass::kNoun, kTagger),
             std::string("It proves quite compelling as an intense, brooding."),
             "review row 2, nouns removed");
  require_eq(corrupt_text(row2, WordClass::kAdj, kTagger),
             std::string("It proves quite as an, brooding character study."),
             "review row 2, adjectives removed");
}

void criterion_subsequence_property() {
  std::mt19937 rng(20260815);
  for (int round = 0; round < 1000; ++round) {
    const std::string sentence = fuzz_sentence(rng);
    const WordClass target = all_word_classes()[round % kWordClassCount];
    const std::string corrupted = corrupt_text(sentence, target, kTagger);
    if (texts_of(tokenize(corrupted)) != filtered_subsequence(sentence, target)) {
      throw CheckFailure("subsequence mismatch on '" + sentence + "' minus " +
                         std::string(word_class_name(target)));
    }
  }

  const TaskSchema& mrpc = schema_for("mrpc");
  std::mt19937 record_rng(4242);
  for (int round = 0; round < 200; ++round) {
    Record record;
    record["sentence1"] = fuzz_sentence(record_rng);
    record["sentence2"] = fuzz_sentence(record_rng);
    record["label"] = static_cast<int>(record_rng() % 2);
    record["idx"] = round;

    const WordClass target = all_word_classes()[round % kWordClassCount];
    const Record corrupted = corrupt_record(record, mrpc, target, kTagger);
    require(corrupted.at("label") == record.at("label"), "label changed by corruption");
    require(corrupted.at("idx") == record.at("idx"), "extra field changed by corruption");
  }
}

void criterion_metric_oracles() {
  std::mt19937 rng(7);
  for (MetricKind metric :
       {MetricKind::kAccuracy, MetricKind::kMatthews, MetricKind::kPearson}) {
    for (int round = 0; round < 500; ++round) {
      const std::size_t n = 1 + rng() % 50;
      std::vector<double> p(n), g(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (metric == MetricKind::kPearson) {
          p[i] = static_cast<double>(rng() % 5001) / 1000.0;
          g[i] = static_cast<double>(rng() % 5001) / 1000.0;
          if (round % 25 == 0) p[i] = 2.5;  // force a degenerate side regularly
        } else {
          const int k = metric == MetricKind::kAccuracy ? 3 : 2;
          p[i] = static_cast<double>(rng() % k);
          g[i] = static_cast<double>(rng() % k);
        }
      }
      const double produced = compute_metric(p, g, metric);
      const double expected = oracle_metric(p, g, metric);
      if (std::abs(produced - expected) > 1e-9) {
        throw CheckFailure(std::string(metric_name(metric)) + " deviates from oracle by " +
                           format_double(std::abs(produced - expected)));
      }
    }
  }

  const double matthews =
      compute_metric({1, 1, 0, 1, 0, 0}, {1, 1, 1, 0, 0, 0}, MetricKind::kMatthews);
  require(std::abs(matthews - 33.33) <= 0.01, "confusion-matrix fixture off 33.33");

  const double pearson = compute_metric({1, 2, 3}, {1, 2, 4}, MetricKind::kPearson);
  require(std::abs(pearson - 98.20) <= 0.01, "correlation fixture off 98.20");

  require_eq(compute_metric({1, 1}, {1, 1}, MetricKind::kMatthews), 0.0,
             "degenerate confusion matrix");
  require_eq(compute_metric({2, 2, 2}, {1, 2, 3}, MetricKind::kPearson), 0.0,
             "degenerate variance");
}

void criterion_delta_replay() {
  TempDir dir;
  ResultsStore store(dir.path() / "reference.jsonl");
  for (const auto& baseline : nludiag_test::kReferenceBaselines) {
    ResultRow row;
    row.task = baseline.task;
    row.backend = "cmd:reference";
    row.metric = baseline.metric;
    row.score = baseline.score;
    row.timestamp = utc_timestamp();
    store.append(row);
  }
  for (const auto& corruption : nludiag_test::kReferenceCorruptions) {
    ResultRow row;
    row.task = corruption.task;
    row.word_class = corruption.word_class;
    row.setting = corruption.setting;
    row.backend = "cmd:reference";
    row.metric = nludiag_test::reference_metric(corruption.task);
    row.score = corruption.score;
    row.baseline = store.baseline_score(corruption.task, row.backend, 0);
    require(row.baseline.has_value(), "baseline missing for " + std::string(corruption.task));
    row.delta = compute_delta(*row.score, *row.baseline);
    row.timestamp = utc_timestamp();
    store.append(row);
  }

  std::size_t checked = 0;
  for (WordClass word_class : {WordClass::kNoun, WordClass::kVerb}) {
    const auto rows = delta_table(store, word_class);
    require_eq(rows.size(), std::size_t{8}, "delta table row count");
    for (const auto& expected : nludiag_test::kReferenceCorruptions) {
      if (expected.word_class != word_class) continue;
      const auto row_it =
          std::find_if(rows.begin(), rows.end(),
                       [&](const DeltaTableRow& row) { return row.task == expected.task; });
      require(row_it != rows.end(), "missing task row " + std::string(expected.task));
      const DeltaCell& cell = row_it->cells[static_cast<std::size_t>(expected.setting)];
      require(cell.score.has_value() && cell.delta.has_value(),
              "empty cell for " + std::string(expected.task));
      if (std::abs(*cell.delta - expected.printed_delta) > 0.01 + 1e-9) {
        throw CheckFailure(std::string(expected.task) + " " +
                           std::string(word_class_name(expected.word_class)) + " " +
                           std::string(setting_name(expected.setting)) + ": delta " +
                           format_double(*cell.delta) + " vs printed " +
                           format_double(expected.printed_delta));
      }
      ++checked;
    }
  }
  require_eq(checked, std::size_t{48}, "replayed cell count");
}

void criterion_cloze_fixture() {
  const auto pair = make_cloze_pair("An unclassifiably awful study in self - and audience-abuse.",
                                    WordClass::kNoun, kTagger);
  require(pair.has_value(), "no cloze pair produced");
  require_eq(pair->masked_original,
             std::string("An unclassifiably awful [MASK] in self - and audience-abuse."),
             "query over the original sentence");
  require_eq(pair->masked_corrupted, std::string("An unclassifiably awful [MASK] in - and."),
             "query over the corrupted sentence");
  require_eq(pair->removed_token, std::string("study"), "removed token");
}

void criterion_setting_semantics() {
  TempDir dir;
  const auto root = dir.path() / "data";

  DatasetSplit train;
  train.task = "sst-2";
  train.split = "train";
  for (const char* text : {"The film was a delight.", "The plot was a mess.",
                           "An actor saved the scene.", "A dull script ruined the night."}) {
    Record r;
    r["sentence"] = text;
    r["label"] = 1;
    train.records.push_back(r);
  }
  DatasetSplit dev = train;
  dev.split = "dev";
  save_split(train, root / "sst-2" / "train.jsonl");
  save_split(dev, root / "sst-2" / "dev.jsonl");

  auto sentences = [](const DatasetSplit& split) {
    std::vector<std::string> out;
    for (const Record& r : split.records) out.push_back(r.at("sentence").get<std::string>());
    return out;
  };
  const auto orig_train = sentences(load_split_from_root(root, "sst-2", "train"));
  const auto orig_dev = sentences(load_split_from_root(root, "sst-2", "dev"));
  const auto corrupt_train =
      sentences(corrupt_dataset(load_split_from_root(root, "sst-2", "train"),
                                WordClass::kDet, kTagger));
  const auto corrupt_dev = sentences(
      corrupt_dataset(load_split_from_root(root, "sst-2", "dev"), WordClass::kDet, kTagger));
  require(corrupt_train != orig_train, "fixture corpus unaffected by corruption");

  const struct {
    CorruptionSetting setting;
    const std::vector<std::string>& train;
    const std::vector<std::string>& eval;
  } expectations[] = {
      {CorruptionSetting::kCorruptTrain, corrupt_train, orig_dev},
      {CorruptionSetting::kCorruptTest, orig_train, corrupt_dev},
      {CorruptionSetting::kCorruptTrainAndTest, corrupt_train, corrupt_dev},
  };

  for (const auto& expected : expectations) {
    RecordingBackend backend;
    ResultsStore store(dir.path() / "results.jsonl");
    ExperimentConfig config{"sst-2", CorruptionSpec{WordClass::kDet, expected.setting},
                            Hyperparams{}, backend.id()};
    run_experiment(config, root, backend, kTagger, store);
    const std::string label(setting_name(expected.setting));
    require(backend.train_calls.size() == 1 && backend.eval_calls.size() == 1,
            label + ": backend not called exactly once");
    require(sentences(backend.train_calls[0]) == expected.train,
            label + ": wrong training split");
    require(sentences(backend.eval_calls[0]) == expected.eval, label + ": wrong eval split");
  }
}

void criterion_desk_scale_end_to_end() {
  TempDir dir;
  const auto root = dir.path() / "data";
  const auto store_path = dir.path() / "results.jsonl";
  write_demo_task(root, "sst-2", 2000, 500, 1);

  const std::string common = " --data-root " + root.string() + " --store " +
                             store_path.string() + " > " +
                             (dir.path() / "run.log").string() + " 2>&1";
  const int run_status = run_cli(
      "run --task sst-2 --word-class noun --setting all --backend bow --seed 0" + common);
  require_eq(run_status, 0, "run exit status");

  ResultsStore store(store_path);
  const auto rows = store.rows();
  require_eq(rows.size(), std::size_t{4}, "store row count");
  std::size_t baselines = 0;
  for (const ResultRow& row : rows) {
    require(row.ok(), "row not ok: " + row.error);
    require(row.score.has_value(), "row without score");
    require(*row.score > 50.0, "score " + format_double(*row.score) +
                                   " does not beat the majority class");
    if (row.is_baseline()) {
      ++baselines;
    } else {
      require(row.delta.has_value(), "corrupted row without delta");
      require(row.word_class == WordClass::kNoun, "unexpected word class in store");
    }
  }
  require_eq(baselines, std::size_t{1}, "baseline row count");

  const auto csv_path = dir.path() / "heatmap.csv";
  require_eq(run_cli("report heatmap --setting corrupt-test --format csv --store " +
                     store_path.string() + " --out " + csv_path.string() + " > /dev/null"),
             0, "report heatmap csv exit status");
  const std::string csv = nludiag_test::read_file(csv_path);
  require_eq(csv.substr(0, csv.find('\n')), std::string("task,noun"), "heatmap csv header");
  require_eq(std::count(csv.begin(), csv.end(), '\n'), std::ptrdiff_t{2},
             "heatmap csv line count");
  require(csv.find("sst-2,") != std::string::npos, "heatmap csv row");

  const auto png_path = dir.path() / "heatmap.png";
  require_eq(run_cli("report heatmap --setting corrupt-test --format png --store " +
                     store_path.string() + " --out " + png_path.string() + " > /dev/null"),
             0, "report heatmap png exit status");
  const std::string png = nludiag_test::read_file(png_path);
  require(png.size() > 8 && png.substr(0, 8) == std::string("\x89PNG\r\n\x1a\n", 8),
          "png signature");
}

void criterion_analysis_fixtures() {
  ParaphraseLexicon pairs;
  pairs.add("film", "movie");
  pairs.add("quick", "fast");
  pairs.add("begin", "start");
  const std::vector<std::pair<std::string, std::string>> correct_pairs = {
      {"The film started late.", "The movie began on time."},
      {"A quick answer came.", "The reply was fast."},
      {"They begin at dawn.", "We start at noon."},
      {"Totally unrelated words.", "Nothing shared here."},
  };
  require_eq(paraphrase_retention(correct_pairs, pairs), 0.75, "paraphrase retention");

  const SentimentLexicon polarity =
      SentimentLexicon::load(nludiag_test::data_dir() / "sentiment_lexicon.tsv");
  const std::vector<std::pair<std::string, std::string>> reviews = {
      {"an unclassifiably awful in - and.", "negative"},
      {"it proves quite compelling as an intense, brooding.", "positive"},
  };
  require_eq(sentiment_retention(reviews, polarity), 1.0, "sentiment retention");

  const std::vector<std::string> sentences = {
      "The cat chased a mouse.",      "The river flooded the town.",
      "A painter mixed fresh colors.", "The clock struck twelve times.",
      "A gardener watered the roses.",
  };
  std::map<std::string, std::string> answers;
  std::size_t granted = 0;
  for (const std::string& sentence : sentences) {
    const auto pair = make_cloze_pair(sentence, WordClass::kNoun, kTagger);
    require(pair.has_value(), "fixture sentence lost its cloze pair");
    if (granted < 2) {
      answers[pair->masked_original] = pair->removed_token;
      ++granted;
    }
  }
  TablePredictor predictor(answers);
  const AnalysisOutcome outcome = masked_prediction_accuracy(
      sentences, WordClass::kNoun, kTagger, predictor, ClozeVariant::kOriginal);
  require_eq(outcome.numerator, std::size_t{2}, "masked numerator");
  require_eq(outcome.denominator, std::size_t{5}, "masked denominator");
  require_eq(outcome.fraction(), 0.40, "masked accuracy");
}

struct Criterion {
  int id;
  std::string name;
  std::function<void()> body;
  double time_limit_seconds;  // 0 = unstated
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "matrix cardinality 192", criterion_matrix_cardinality, 1.0},
      {2, "corruption fixtures", criterion_corruption_fixtures, 1.0},
      {3, "subsequence property (1000 fuzzed sentences)", criterion_subsequence_property, 30.0},
      {4, "metric oracles", criterion_metric_oracles, 0.0},
      {5, "reference delta replay within 0.01", criterion_delta_replay, 1.0},
      {6, "cloze query fixture", criterion_cloze_fixture, 1.0},
      {7, "setting semantics via recording backend", criterion_setting_semantics, 0.0},
      {8, "desk-scale end-to-end run and report", criterion_desk_scale_end_to_end, 300.0},
      {9, "analysis fixtures", criterion_analysis_fixtures, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && criterion.time_limit_seconds > 0.0 &&
        elapsed > criterion.time_limit_seconds) {
      failure = "exceeded " + format_double(criterion.time_limit_seconds) + "s time limit";
    }

    std::ostringstream line;
    line << (failure.empty() ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
         << criterion.name << " (" << static_cast<long>(elapsed * 1000.0) << " ms)";
    if (!failure.empty()) {
      line << " - " << failure;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
