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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nludiag/analysis.hpp"
#include "nludiag/corruption.hpp"
#include "nludiag/error.hpp"
#include "nludiag/experiment.hpp"
#include "nludiag/metrics.hpp"
#include "nludiag/schema.hpp"
#include "nludiag/tagger.hpp"
#include "nludiag/text.hpp"

namespace py = pybind11;

namespace nludiag {
namespace {

// Adapts a Python callable (masked text -> word) to the predictor interface.
class CallablePredictor final : public MaskedPredictor {
 public:
  explicit CallablePredictor(py::object fn) : fn_(std::move(fn)) {}

  std::string predict_top1(const std::string& masked_text) override {
    return py::cast<std::string>(fn_(masked_text));
  }

  std::string id() const override { return "python-callable"; }

 private:
  py::object fn_;
};

std::vector<std::string> tokenize_texts(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& token : tokenize(text)) out.push_back(token.text);
  return out;
}

std::vector<WordClass> classes_from_names(const std::vector<std::string>& names) {
  std::vector<WordClass> classes;
  classes.reserve(names.size());
  for (const std::string& name : names) classes.push_back(word_class_from_name(name));
  return classes;
}

std::vector<CorruptionSetting> settings_from_names(const std::vector<std::string>& names) {
  std::vector<CorruptionSetting> settings;
  settings.reserve(names.size());
  for (const std::string& name : names) settings.push_back(setting_from_name(name));
  return settings;
}

py::dict schema_dict(const TaskSchema& schema) {
  py::dict out;
  out["name"] = schema.name;
  out["text_fields"] = schema.text_fields;
  out["label_field"] = schema.label_field;
  out["label_kind"] = std::string(label_kind_name(schema.label_kind));
  out["metric"] = std::string(metric_name(schema.metric));
  out["eval_split"] = schema.eval_split;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word-class corruption diagnostics for NLU datasets";

  py::register_exception<Error>(m, "Error");

  m.def("tokenize", &tokenize_texts, py::arg("text"),
        "Split text into surface tokens (whitespace plus punctuation rules).");
  m.def(
      "detokenize",
      [](const std::vector<std::string>& tokens) { return detokenize(tokens); },
      py::arg("tokens"), "Rejoin tokens, re-attaching single-character punctuation.");
  m.def(
      "map_to_universal",
      [](const std::string& fine_tag) { return std::string(upos_name(map_to_universal(fine_tag))); },
      py::arg("fine_tag"), "Reduce a fine-grained tag to its universal class name.");

  py::class_<Tagger>(m, "Tagger", "Deterministic part-of-speech tagger.")
      .def(
          "tag",
          [](const Tagger& tagger, const std::string& text) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const TaggedToken& tt : tagger.tag(tokenize(text))) {
              out.emplace_back(tt.token.text, upos_name(tt.upos));
            }
            return out;
          },
          py::arg("text"), "Tag a sentence; returns (token, universal class) pairs.")
      .def_property_readonly("id", &Tagger::id);
  m.def("make_tagger", &make_tagger, py::arg("spec"),
        "Build a tagger from \"rule\" or \"perceptron:<weights-path>\".");

  m.def("word_classes", [] {
    std::vector<std::string> names;
    for (WordClass word_class : all_word_classes()) {
      names.emplace_back(word_class_name(word_class));
    }
    return names;
  });
  m.def("corruption_settings", [] {
    std::vector<std::string> names;
    for (CorruptionSetting setting : all_settings()) names.emplace_back(setting_name(setting));
    return names;
  });
  m.def(
      "corrupt_text",
      [](const std::string& text, const std::string& word_class, const Tagger& tagger) {
        return corrupt_text(text, word_class_from_name(word_class), tagger);
      },
      py::arg("text"), py::arg("word_class"), py::arg("tagger"),
      "Remove every token of the word class; empty result means a fully-removed sentence.");
  m.def(
      "make_cloze_pair",
      [](const std::string& text, const std::string& word_class, const Tagger& tagger,
         const std::string& mask_token) -> std::optional<py::tuple> {
        auto pair =
            make_cloze_pair(text, word_class_from_name(word_class), tagger, mask_token);
        if (!pair) return std::nullopt;
        return py::make_tuple(pair->masked_original, pair->masked_corrupted,
                              pair->removed_token);
      },
      py::arg("text"), py::arg("word_class"), py::arg("tagger"),
      py::arg("mask_token") = std::string(kDefaultMaskToken),
      "(masked original, masked corrupted, removed token), or None without a target token.");

  m.def("tasks", [] {
    std::vector<std::string> names;
    for (const auto& [name, schema] : task_registry()) names.push_back(name);
    return names;
  });
  m.def(
      "task_schema", [](const std::string& task) { return schema_dict(schema_for(task)); },
      py::arg("task"));

  m.def(
      "enumerate_configs",
      [](const std::vector<std::string>& tasks, const std::vector<std::string>& classes,
         const std::vector<std::string>& settings, const std::string& backend, int seed) {
        Hyperparams hp;
        hp.seed = seed;
        py::list out;
        for (const ExperimentConfig& config :
             enumerate_configs(tasks, classes_from_names(classes), settings_from_names(settings),
                               hp, backend)) {
          py::dict row;
          row["task"] = config.task;
          row["word_class"] = std::string(word_class_name(config.corruption->word_class));
          row["setting"] = std::string(setting_name(config.corruption->setting));
          row["backend"] = config.backend_id;
          row["seed"] = config.hyperparams.seed;
          out.append(row);
        }
        return out;
      },
      py::arg("tasks"), py::arg("classes"), py::arg("settings"), py::arg("backend") = "bow",
      py::arg("seed") = 0, "The corruption matrix: one dict per (task, class, setting).");

  m.def(
      "compute_metric",
      [](const std::vector<double>& predictions, const std::vector<double>& golds,
         const std::string& metric) {
        return compute_metric(predictions, golds, metric_from_name(metric));
      },
      py::arg("predictions"), py::arg("golds"), py::arg("metric"),
      "Percent-scale accuracy, matthews, or pearson.");
  m.def("compute_delta", &compute_delta, py::arg("score"), py::arg("baseline"));

  py::class_<ParaphraseLexicon>(m, "ParaphraseLexicon",
                                "Unordered lowercase unigram paraphrase pairs.")
      .def(py::init<bool>(), py::arg("include_identity") = false)
      .def_static("load", &ParaphraseLexicon::load, py::arg("path"),
                  py::arg("include_identity") = false)
      .def("add", &ParaphraseLexicon::add, py::arg("a"), py::arg("b"))
      .def("contains", &ParaphraseLexicon::contains, py::arg("a"), py::arg("b"))
      .def_property_readonly("size", &ParaphraseLexicon::size)
      .def_property_readonly("skipped_lines", &ParaphraseLexicon::skipped_lines);

  py::class_<SentimentLexicon>(m, "SentimentLexicon",
                               "Word to {positive, negative} polarity subsets.")
      .def(py::init<>())
      .def_static("load", &SentimentLexicon::load, py::arg("path"))
      .def("add", &SentimentLexicon::add, py::arg("word"), py::arg("polarity"))
      .def_property_readonly("size", &SentimentLexicon::size)
      .def_property_readonly("skipped_lines", &SentimentLexicon::skipped_lines);

  m.def("has_lexical_paraphrase", &has_lexical_paraphrase, py::arg("sentence_a"),
        py::arg("sentence_b"), py::arg("lexicon"));
  m.def("paraphrase_retention", &paraphrase_retention, py::arg("correct_pairs"),
        py::arg("lexicon"), "Fraction of correct pairs still sharing a lexicon pair.");
  m.def(
      "sentiment_labels",
      [](const std::string& text, const SentimentLexicon& lexicon) {
        return sentiment_labels(text, lexicon);
      },
      py::arg("text"), py::arg("lexicon"),
      "Union of the polarity sets of the text's lexicon words.");
  m.def("sentiment_retention", &sentiment_retention, py::arg("correct_examples"),
        py::arg("lexicon"), "Fraction of correct examples whose gold polarity survives.");

  py::class_<AnalysisOutcome>(m, "AnalysisOutcome")
      .def_readonly("numerator", &AnalysisOutcome::numerator)
      .def_readonly("denominator", &AnalysisOutcome::denominator)
      .def_property_readonly("fraction", &AnalysisOutcome::fraction);

  m.def("normalize_cloze_token", &normalize_cloze_token, py::arg("token"),
        "Lowercase and strip surrounding punctuation; the cloze equality key.");
  m.def(
      "masked_prediction_accuracy",
      [](const std::vector<std::string>& sentences, const std::string& word_class,
         const Tagger& tagger, py::object predictor, const std::string& variant,
         const std::string& mask_token) {
        CallablePredictor wrapped(std::move(predictor));
        const ClozeVariant which =
            variant == "original" ? ClozeVariant::kOriginal : ClozeVariant::kCorrupted;
        return masked_prediction_accuracy(sentences, word_class_from_name(word_class), tagger,
                                          wrapped, which, mask_token);
      },
      py::arg("sentences"), py::arg("word_class"), py::arg("tagger"), py::arg("predictor"),
      py::arg("variant") = "original", py::arg("mask_token") = std::string(kDefaultMaskToken),
      "Cloze accuracy of a predictor callable over the sentences' cloze pairs.");
}

}  // namespace nludiag
