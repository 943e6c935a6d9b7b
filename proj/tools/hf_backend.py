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

"""Reference transformer fine-tuning backend (nludiag-backend-v1 protocol).

Reads one JSON request on stdin and writes one JSON response on stdout:

    request:  {"version": "nludiag-backend-v1", "task": ..., "schema": {...},
               "hyperparams": {...}, "train": [records], "eval": [records]}
    response: {"predictions": [numbers]} or {"error": "message"}

Fine-tunes NLUDIAG_MODEL (default roberta-base) with the hyperparameters in
the request. Intended for GPU machines; attach it as a trainer with

    --backend "cmd:python3 tools/hf_backend.py"
"""

import json
import os
import sys


def respond(payload):
    sys.stdout.write(json.dumps(payload) + "\n")
    sys.stdout.flush()


def main():
    request = json.load(sys.stdin)
    if request.get("version") != "nludiag-backend-v1":
        respond({"error": f"unsupported protocol version: {request.get('version')}"})
        return 1

    try:
        import numpy as np
        import torch
        from torch.utils.data import DataLoader
        from transformers import (AutoModelForSequenceClassification, AutoTokenizer,
                                  get_linear_schedule_with_warmup)
    except ImportError as err:
        respond({"error": f"missing dependency: {err}"})
        return 1

    schema = request["schema"]
    hp = request["hyperparams"]
    fields = schema["text_fields"]
    label_field = schema["label_field"]
    regression = schema["label_kind"] == "regression-0-5"
    num_labels = 1 if regression else (3 if schema["label_kind"] == "multiclass-3" else 2)

    model_name = os.environ.get("NLUDIAG_MODEL", "roberta-base")
    device = "cuda" if torch.cuda.is_available() else "cpu"
    torch.manual_seed(hp["seed"])

    tokenizer = AutoTokenizer.from_pretrained(model_name)
    model = AutoModelForSequenceClassification.from_pretrained(
        model_name, num_labels=num_labels).to(device)

    def encode(records):
        first = [r[fields[0]] for r in records]
        second = [r[fields[1]] for r in records] if len(fields) == 2 else None
        return tokenizer(first, second, truncation=True, max_length=128,
                         padding=True, return_tensors="pt")

    def batches(records, size, shuffle):
        order = np.random.RandomState(hp["seed"]).permutation(len(records)) \
            if shuffle else np.arange(len(records))
        for start in range(0, len(order), size):
            yield [records[i] for i in order[start:start + size]]

    optimizer = torch.optim.AdamW(model.parameters(), lr=hp["learning_rate"])
    steps = hp["epochs"] * ((len(request["train"]) + hp["batch_size"] - 1)
                            // hp["batch_size"])
    scheduler = get_linear_schedule_with_warmup(optimizer, 0, steps)

    model.train()
    for _ in range(hp["epochs"]):
        for batch in batches(request["train"], hp["batch_size"], shuffle=True):
            inputs = {k: v.to(device) for k, v in encode(batch).items()}
            labels = torch.tensor([r[label_field] for r in batch],
                                  dtype=torch.float if regression else torch.long,
                                  device=device)
            if regression:
                labels = labels.unsqueeze(-1)
            loss = model(**inputs, labels=labels).loss
            loss.backward()
            optimizer.step()
            scheduler.step()
            optimizer.zero_grad()

    model.eval()
    predictions = []
    with torch.no_grad():
        for batch in batches(request["eval"], hp["batch_size"], shuffle=False):
            inputs = {k: v.to(device) for k, v in encode(batch).items()}
            logits = model(**inputs).logits
            if regression:
                predictions.extend(logits.squeeze(-1).clamp(0.0, 5.0).tolist())
            else:
                predictions.extend(logits.argmax(dim=-1).tolist())

    respond({"predictions": [float(p) for p in predictions]})
    return 0


if __name__ == "__main__":
    sys.exit(main())
