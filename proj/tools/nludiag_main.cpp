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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "nludiag/analysis.hpp"
#include "nludiag/backend.hpp"
#include "nludiag/corruption.hpp"
#include "nludiag/dataset.hpp"
#include "nludiag/error.hpp"
#include "nludiag/experiment.hpp"
#include "nludiag/predictor.hpp"
#include "nludiag/report.hpp"
#include "nludiag/store.hpp"
#include "nludiag/tagger.hpp"

namespace {

using nludiag::Error;
using nludiag::ErrorCode;

std::filesystem::path env_root() {
  const char* root = std::getenv("NLUDIAG_ROOT");
  return root == nullptr ? std::filesystem::path(".") : std::filesystem::path(root);
}

struct CommonOpts {
  std::vector<std::string> tasks;
  std::vector<std::string> word_classes;
  std::vector<std::string> settings;
  std::string backend = "bow";
  int seed = 0;
  std::string data_root;
  std::string store;
  std::string out;
  std::string format = "text";
  std::string tagger = "rule";
  std::string split;
  std::string lexicon;
  std::string predictions;
  std::string mask = std::string(nludiag::kDefaultMaskToken);
  bool identity = false;
  double scale_max = 0.0;

  std::filesystem::path resolved_data_root() const {
    return data_root.empty() ? env_root() / "data" : std::filesystem::path(data_root);
  }

  std::filesystem::path resolved_store() const {
    return store.empty() ? env_root() / "results.jsonl" : std::filesystem::path(store);
  }
};

std::vector<nludiag::WordClass> parse_classes(const std::vector<std::string>& names) {
  std::vector<nludiag::WordClass> classes;
  for (const std::string& name : names) {
    if (name == "all") {
      for (nludiag::WordClass c : nludiag::all_word_classes()) classes.push_back(c);
    } else {
      classes.push_back(nludiag::word_class_from_name(name));
    }
  }
  return classes;
}

std::vector<nludiag::CorruptionSetting> parse_settings(const std::vector<std::string>& names) {
  std::vector<nludiag::CorruptionSetting> settings;
  for (const std::string& name : names) {
    if (name == "all") {
      for (nludiag::CorruptionSetting s : nludiag::all_settings()) settings.push_back(s);
    } else {
      settings.push_back(nludiag::setting_from_name(name));
    }
  }
  return settings;
}

std::vector<std::string> parse_tasks(const std::vector<std::string>& names) {
  std::vector<std::string> tasks;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const auto& [task, schema] : nludiag::task_registry()) tasks.push_back(task);
    } else {
      (void)nludiag::schema_for(name);  // validates
      tasks.push_back(name);
    }
  }
  return tasks;
}

// Provenance copy of the options a command actually ran with.
void echo_config(const CommonOpts& opts, const std::string& command,
                 const std::filesystem::path& out_dir) {
  nlohmann::ordered_json config;
  config["command"] = command;
  config["task"] = opts.tasks;
  config["word_class"] = opts.word_classes;
  config["setting"] = opts.settings;
  config["backend"] = opts.backend;
  config["seed"] = opts.seed;
  config["data_root"] = opts.resolved_data_root().string();
  config["store"] = opts.resolved_store().string();
  config["out"] = opts.out;
  config["format"] = opts.format;
  config["tagger"] = opts.tagger;
  if (!opts.split.empty()) config["split"] = opts.split;
  if (!opts.lexicon.empty()) config["lexicon"] = opts.lexicon;
  if (!opts.predictions.empty()) config["predictions"] = opts.predictions;

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ofstream out(out_dir / "effective-config.json", std::ios::trunc);
  if (out) out << config.dump(2) << '\n';
}

void write_or_print(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  const std::filesystem::path path(out_path);
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + out_path);
  out << content;
}

std::filesystem::path out_dir_of(const CommonOpts& opts,
                                 const std::filesystem::path& fallback) {
  if (opts.out.empty()) return fallback;
  const std::filesystem::path path(opts.out);
  return path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
}

std::vector<std::string> require_one(const std::vector<std::string>& values,
                                     const std::string& flag) {
  if (values.empty()) throw Error(ErrorCode::kUsage, "missing required flag " + flag);
  return values;
}

// Keeps only records the supplied predictions file got right. The file holds
// a JSON array aligned 1:1 with the split.
std::vector<nludiag::Record> filter_correct(const std::vector<nludiag::Record>& records,
                                            const nludiag::TaskSchema& schema,
                                            const std::string& predictions_path) {
  std::ifstream in(predictions_path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + predictions_path);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(in, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_array() || parsed.size() != records.size()) {
    throw Error(ErrorCode::kBadFormat,
                predictions_path + " is not a JSON array aligned with the split (" +
                    std::to_string(records.size()) + " records)");
  }
  std::vector<nludiag::Record> correct;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!parsed[i].is_number()) {
      throw Error(ErrorCode::kBadFormat, "prediction " + std::to_string(i) + " is not numeric");
    }
    if (parsed[i].get<double>() == nludiag::label_value(records[i], schema)) {
      correct.push_back(records[i]);
    }
  }
  return correct;
}

int run_corrupt(const CommonOpts& opts) {
  const std::vector<std::string> tasks = require_one(opts.tasks, "--task");
  const std::vector<nludiag::WordClass> classes =
      parse_classes(require_one(opts.word_classes, "--word-class"));
  const auto tagger = nludiag::make_tagger(opts.tagger);
  const std::filesystem::path data_root = opts.resolved_data_root();

  for (const std::string& task : tasks) {
    const nludiag::TaskSchema& schema = nludiag::schema_for(task);
    std::vector<std::string> splits =
        opts.split.empty() ? std::vector<std::string>{"train", schema.eval_split}
                           : std::vector<std::string>{opts.split};
    for (nludiag::WordClass word_class : classes) {
      for (const std::string& split : splits) {
        const nludiag::DatasetSplit original =
            nludiag::load_split_from_root(data_root, task, split);
        const nludiag::DatasetSplit corrupted =
            nludiag::corrupt_dataset(original, word_class, *tagger);
        const std::filesystem::path dir =
            nludiag::split_dir(data_root, task, word_class);
        nludiag::save_split(corrupted, dir / (split + ".jsonl"));
        echo_config(opts, "corrupt", dir);
        std::cout << dir.string() << "/" << split << ".jsonl: " << corrupted.records.size()
                  << " records\n";
      }
    }
  }
  return 0;
}

int run_run(const CommonOpts& opts) {
  const std::vector<std::string> tasks = parse_tasks(require_one(opts.tasks, "--task"));
  nludiag::Hyperparams hp;
  hp.seed = opts.seed;

  std::vector<nludiag::ExperimentConfig> configs;
  for (const std::string& task : tasks) {
    configs.push_back(nludiag::ExperimentConfig{task, std::nullopt, hp, opts.backend});
  }
  if (!opts.word_classes.empty()) {
    const std::vector<std::string> setting_names =
        opts.settings.empty() ? std::vector<std::string>{"all"} : opts.settings;
    const auto corrupted = nludiag::enumerate_configs(
        tasks, parse_classes(opts.word_classes), parse_settings(setting_names), hp, opts.backend);
    configs.insert(configs.end(), corrupted.begin(), corrupted.end());
  }

  const auto tagger = nludiag::make_tagger(opts.tagger);
  const auto backend = nludiag::make_backend(opts.backend);
  nludiag::ResultsStore store(opts.resolved_store());

  const auto results = nludiag::run_matrix(configs, opts.resolved_data_root(), *backend,
                                           *tagger, store);

  for (const nludiag::ExperimentResult& result : results) {
    std::cout << result.config.task;
    if (result.config.corruption) {
      std::cout << " " << nludiag::word_class_name(result.config.corruption->word_class) << " "
                << nludiag::setting_name(result.config.corruption->setting);
    } else {
      std::cout << " baseline";
    }
    std::cout << " score=" << nludiag::format_double(result.score);
    if (result.delta) std::cout << " delta=" << nludiag::format_double(*result.delta);
    std::cout << "\n";
  }
  const std::size_t failed = configs.size() - results.size();
  if (failed > 0) std::cerr << failed << " config(s) failed; see store rows\n";
  std::cout << "store: " << store.path().string() << "\n";
  echo_config(opts, "run", store.path().has_parent_path() ? store.path().parent_path()
                                                          : std::filesystem::path("."));
  return failed == 0 ? 0 : 3;
}

int run_probe(const CommonOpts& opts) {
  const std::string task = require_one(opts.tasks, "--task").front();
  const nludiag::WordClass word_class =
      nludiag::word_class_from_name(require_one(opts.word_classes, "--word-class").front());
  const nludiag::TaskSchema& schema = nludiag::schema_for(task);
  const std::string split = opts.split.empty() ? schema.eval_split : opts.split;

  const nludiag::DatasetSplit dataset =
      nludiag::load_split_from_root(opts.resolved_data_root(), task, split);
  std::vector<std::string> sentences;
  for (const nludiag::Record& record : dataset.records) {
    for (const std::string& field : schema.text_fields) {
      sentences.push_back(record.at(field).get<std::string>());
    }
  }

  const auto tagger = nludiag::make_tagger(opts.tagger);
  const auto predictor = nludiag::make_masked_predictor(opts.backend, opts.mask);

  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (nludiag::ClozeVariant variant :
       {nludiag::ClozeVariant::kOriginal, nludiag::ClozeVariant::kCorrupted}) {
    const nludiag::AnalysisOutcome outcome = nludiag::masked_prediction_accuracy(
        sentences, word_class, *tagger, *predictor, variant, opts.mask);
    reports.push_back(
        nludiag::analysis_report("masked-prediction", task, word_class, variant, outcome));
  }

  write_or_print(reports.dump(2) + "\n", opts.out);
  if (!opts.out.empty()) echo_config(opts, "probe", out_dir_of(opts, "."));
  return 0;
}

int run_analyze(const CommonOpts& opts, const std::string& which) {
  const std::string task = require_one(opts.tasks, "--task").front();
  const nludiag::WordClass word_class =
      nludiag::word_class_from_name(require_one(opts.word_classes, "--word-class").front());
  const nludiag::TaskSchema& schema = nludiag::schema_for(task);
  const std::string split = opts.split.empty() ? schema.eval_split : opts.split;

  const nludiag::DatasetSplit original =
      nludiag::load_split_from_root(opts.resolved_data_root(), task, split);
  const auto tagger = nludiag::make_tagger(opts.tagger);
  const nludiag::DatasetSplit corrupted =
      nludiag::corrupt_dataset(original, word_class, *tagger);

  std::vector<nludiag::Record> records = corrupted.records;
  if (!opts.predictions.empty()) records = filter_correct(records, schema, opts.predictions);
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no records left to analyze");
  }

  nludiag::AnalysisOutcome outcome;
  if (which == "paraphrase") {
    if (schema.text_fields.size() != 2) {
      throw Error(ErrorCode::kUsage, "paraphrase analysis needs a sentence-pair task");
    }
    const std::filesystem::path lexicon_path =
        opts.lexicon.empty() ? opts.resolved_data_root() / "paraphrase_sample.tsv"
                             : std::filesystem::path(opts.lexicon);
    const auto lexicon = nludiag::ParaphraseLexicon::load(lexicon_path, opts.identity);
    for (const nludiag::Record& record : records) {
      ++outcome.denominator;
      if (nludiag::has_lexical_paraphrase(record.at(schema.text_fields[0]).get<std::string>(),
                                          record.at(schema.text_fields[1]).get<std::string>(),
                                          lexicon)) {
        ++outcome.numerator;
      }
    }
  } else {
    if (schema.text_fields.size() != 1 || schema.label_kind != nludiag::LabelKind::kBinary) {
      throw Error(ErrorCode::kUsage, "sentiment analysis needs a binary single-sentence task");
    }
    const std::filesystem::path lexicon_path =
        opts.lexicon.empty() ? opts.resolved_data_root() / "sentiment_lexicon.tsv"
                             : std::filesystem::path(opts.lexicon);
    const auto lexicon = nludiag::SentimentLexicon::load(lexicon_path);
    for (const nludiag::Record& record : records) {
      ++outcome.denominator;
      const std::string gold =
          nludiag::label_value(record, schema) == 1.0 ? "positive" : "negative";
      const auto labels = nludiag::sentiment_labels(
          record.at(schema.text_fields[0]).get<std::string>(), lexicon);
      if (labels.count(gold) > 0) ++outcome.numerator;
    }
  }

  const auto report = nludiag::analysis_report(which + "-retention", task, word_class,
                                               std::nullopt, outcome);
  write_or_print(report.dump(2) + "\n", opts.out);
  if (!opts.out.empty()) echo_config(opts, "analyze " + which, out_dir_of(opts, "."));
  return 0;
}

int run_report(const CommonOpts& opts, const std::string& which) {
  nludiag::ResultsStore store(opts.resolved_store());
  std::string content;
  if (which == "baseline") {
    const auto rows = nludiag::baseline_table(store);
    content = opts.format == "csv" ? nludiag::render_baseline_csv(rows)
                                   : nludiag::render_baseline_text(rows);
    if (opts.format == "png") {
      throw Error(ErrorCode::kUsage, "baseline tables render as text or csv");
    }
  } else if (which == "delta") {
    const nludiag::WordClass word_class =
        nludiag::word_class_from_name(require_one(opts.word_classes, "--word-class").front());
    const auto rows = nludiag::delta_table(store, word_class);
    if (opts.format == "png") {
      throw Error(ErrorCode::kUsage, "delta tables render as text or csv");
    }
    content = opts.format == "csv" ? nludiag::render_delta_csv(rows)
                                   : nludiag::render_delta_text(rows, word_class);
  } else {
    const nludiag::CorruptionSetting setting =
        nludiag::setting_from_name(require_one(opts.settings, "--setting").front());
    const nludiag::HeatmapMatrix matrix = nludiag::heatmap(store, setting);
    if (opts.format == "png") {
      if (opts.out.empty()) {
        throw Error(ErrorCode::kUsage, "--format png needs --out <file.png>");
      }
      std::optional<double> bound;
      if (opts.scale_max > 0.0) bound = opts.scale_max;
      nludiag::render_heatmap_png(matrix, opts.out, bound);
      echo_config(opts, "report heatmap", out_dir_of(opts, "."));
      std::cout << opts.out << "\n";
      return 0;
    }
    content = opts.format == "csv" ? nludiag::render_heatmap_csv(matrix)
                                   : nludiag::render_heatmap_text(matrix);
  }
  write_or_print(content, opts.out);
  if (!opts.out.empty()) echo_config(opts, "report " + which, out_dir_of(opts, "."));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-class corruption diagnostics for NLU datasets"};
  app.require_subcommand(1);
  app.set_config("--config");

  CommonOpts opts;
  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--task", opts.tasks, "task name (repeatable; 'all' for the registry)");
    cmd->add_option("--word-class", opts.word_classes,
                    "word class to remove (repeatable; 'all' for the eight classes)");
    cmd->add_option("--setting", opts.settings,
                    "corrupt-train | corrupt-test | corrupt-train-and-test | all (repeatable)");
    cmd->add_option("--backend", opts.backend,
                    "trainer or predictor: bow, cmd:<command>, constant:<word>");
    cmd->add_option("--seed", opts.seed, "run seed");
    cmd->add_option("--data-root", opts.data_root,
                    "dataset root (default $NLUDIAG_ROOT/data or ./data)");
    cmd->add_option("--store", opts.store,
                    "results store path (default $NLUDIAG_ROOT/results.jsonl)");
    cmd->add_option("--out", opts.out, "output file (default stdout)");
    cmd->add_option("--format", opts.format, "text | csv | png")
        ->check(CLI::IsMember({"text", "csv", "png"}));
    cmd->add_option("--tagger", opts.tagger, "rule or perceptron:<weights-file>");
    cmd->add_option("--split", opts.split, "split override (default train + eval split)");
    cmd->add_option("--lexicon", opts.lexicon, "lexicon file override");
    cmd->add_option("--predictions", opts.predictions,
                    "JSON predictions array; restricts analysis to correct records");
    cmd->add_option("--mask", opts.mask, "mask placeholder token");
    cmd->add_flag("--identity", opts.identity,
                  "count a word shared by both sentences as its own paraphrase");
    cmd->add_option("--scale-max", opts.scale_max,
                    "pin the heatmap color scale to +-VALUE (default data-driven)");
  };

  CLI::App* corrupt = app.add_subcommand("corrupt", "write corrupted dataset variants");
  CLI::App* run = app.add_subcommand("run", "run the corruption matrix against a backend");
  CLI::App* probe = app.add_subcommand("probe", "masked-token prediction accuracy");
  CLI::App* analyze = app.add_subcommand("analyze", "residual lexical-cue analyses");
  CLI::App* analyze_paraphrase =
      analyze->add_subcommand("paraphrase", "lexical paraphrase retention");
  CLI::App* analyze_sentiment =
      analyze->add_subcommand("sentiment", "sentiment polarity retention");
  analyze->require_subcommand(1);
  CLI::App* report = app.add_subcommand("report", "render tables and heatmaps from a store");
  CLI::App* report_baseline = report->add_subcommand("baseline", "per-task baseline scores");
  CLI::App* report_delta = report->add_subcommand("delta", "score/delta table for one class");
  CLI::App* report_heatmap = report->add_subcommand("heatmap", "task x class delta matrix");
  report->require_subcommand(1);

  for (CLI::App* cmd : {corrupt, run, probe, analyze_paraphrase, analyze_sentiment,
                        report_baseline, report_delta, report_heatmap}) {
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (corrupt->parsed()) return run_corrupt(opts);
    if (run->parsed()) return run_run(opts);
    if (probe->parsed()) return run_probe(opts);
    if (analyze->parsed()) {
      return run_analyze(opts, analyze_paraphrase->parsed() ? "paraphrase" : "sentiment");
    }
    if (report->parsed()) {
      const std::string which = report_baseline->parsed()  ? "baseline"
                                : report_delta->parsed()   ? "delta"
                                                           : "heatmap";
      return run_report(opts, which);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << nludiag::error_code_name(e.code()) << "): " << e.message() << "\n";
    return nludiag::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
