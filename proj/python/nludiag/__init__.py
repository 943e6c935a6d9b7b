# Copyright 2026 The nludiag Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Word-class corruption diagnostics for NLU datasets.

Python bindings over the C++ core: tokenization, tagging, corruption, the
experiment-matrix enumeration, metrics, and the lexical-cue analyses.
"""

from ._core import (AnalysisOutcome, Error, ParaphraseLexicon, SentimentLexicon,
                    Tagger, compute_delta, compute_metric, corrupt_text,
                    corruption_settings, detokenize, enumerate_configs,
                    has_lexical_paraphrase, make_cloze_pair, make_tagger,
                    map_to_universal, masked_prediction_accuracy,
                    normalize_cloze_token, paraphrase_retention,
                    sentiment_labels, sentiment_retention, task_schema, tasks,
                    tokenize, word_classes)

__version__ = "0.1.0"

__all__ = [
    "AnalysisOutcome",
    "Error",
    "ParaphraseLexicon",
    "SentimentLexicon",
    "Tagger",
    "compute_delta",
    "compute_metric",
    "corrupt_text",
    "corruption_settings",
    "detokenize",
    "enumerate_configs",
    "has_lexical_paraphrase",
    "make_cloze_pair",
    "make_tagger",
    "map_to_universal",
    "masked_prediction_accuracy",
    "normalize_cloze_token",
    "paraphrase_retention",
    "sentiment_labels",
    "sentiment_retention",
    "task_schema",
    "tasks",
    "tokenize",
    "word_classes",
]
