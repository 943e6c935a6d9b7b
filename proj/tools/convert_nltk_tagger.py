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

"""Converts a pickled averaged-perceptron tagger to the text weights format.

The library loads tagger weights from a plain-text file:

    nludiag-perceptron v1
    classes <K>
    <tag>                      (K lines)
    tagdict <N>
    <word>\t<tag>              (N lines)
    weights <M>
    <feature>\t<tag>\t<weight> (M lines)

Input is either the NLTK pickle (averaged_perceptron_tagger.pickle: a tuple
of weights, tagdict, classes) or a JSON file with keys "weights", "tagdict",
"classes". Words or features containing tab or newline are dropped with a
warning; the wire format is line-based.

Usage:
    python3 tools/convert_nltk_tagger.py INPUT OUTPUT
"""

import json
import pickle
import sys


def load(path):
    if path.endswith(".json"):
        with open(path, encoding="utf-8") as handle:
            blob = json.load(handle)
        return blob["weights"], blob["tagdict"], list(blob["classes"])
    with open(path, "rb") as handle:
        weights, tagdict, classes = pickle.load(handle)
    return weights, tagdict, list(classes)


def clean(text):
    return "\t" not in text and "\n" not in text and "\r" not in text


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    weights, tagdict, classes = load(sys.argv[1])

    dropped = 0
    rows = []
    for feature, per_class in sorted(weights.items()):
        if not clean(feature):
            dropped += 1
            continue
        for tag, weight in sorted(per_class.items()):
            rows.append((feature, tag, float(weight)))

    dict_rows = []
    for word, tag in sorted(tagdict.items()):
        if not clean(word) or not clean(tag):
            dropped += 1
            continue
        dict_rows.append((word, tag))

    with open(sys.argv[2], "w", encoding="utf-8") as out:
        out.write("nludiag-perceptron v1\n")
        out.write(f"classes {len(classes)}\n")
        for tag in sorted(classes):
            out.write(f"{tag}\n")
        out.write(f"tagdict {len(dict_rows)}\n")
        for word, tag in dict_rows:
            out.write(f"{word}\t{tag}\n")
        out.write(f"weights {len(rows)}\n")
        for feature, tag, weight in rows:
            out.write(f"{feature}\t{tag}\t{weight!r}\n")

    if dropped:
        print(f"dropped {dropped} unrepresentable entries", file=sys.stderr)
    print(f"wrote {sys.argv[2]}: {len(classes)} classes, "
          f"{len(dict_rows)} tagdict words, {len(rows)} weights")


if __name__ == "__main__":
    main()
