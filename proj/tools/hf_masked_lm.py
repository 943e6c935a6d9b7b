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

"""Reference masked-LM predictor (nludiag-probe-v1 line protocol).

Persistent child process: one JSON object per stdin line, one per stdout line.

    request:  {"version": "nludiag-probe-v1", "mask_token": "[MASK]", "text": ...}
    response: {"token": "word"} or {"error": "message"}

Fills the first mask with NLUDIAG_MLM_MODEL's (default bert-base-uncased)
top-1 token. Attach it as a probe with

    --mask "cmd:python3 tools/hf_masked_lm.py"
"""

import json
import os
import sys


def main():
    try:
        import torch
        from transformers import AutoModelForMaskedLM, AutoTokenizer
    except ImportError as err:
        sys.stdout.write(json.dumps({"error": f"missing dependency: {err}"}) + "\n")
        sys.stdout.flush()
        return 1

    model_name = os.environ.get("NLUDIAG_MLM_MODEL", "bert-base-uncased")
    device = "cuda" if torch.cuda.is_available() else "cpu"
    tokenizer = AutoTokenizer.from_pretrained(model_name)
    model = AutoModelForMaskedLM.from_pretrained(model_name).to(device).eval()

    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
            if request.get("version") != "nludiag-probe-v1":
                raise ValueError(f"unsupported protocol version: {request.get('version')}")
            text = request["text"].replace(request["mask_token"], tokenizer.mask_token)
            inputs = tokenizer(text, truncation=True, max_length=128,
                               return_tensors="pt").to(device)
            positions = (inputs["input_ids"][0] == tokenizer.mask_token_id).nonzero()
            if positions.numel() == 0:
                raise ValueError("no mask token in text")
            with torch.no_grad():
                logits = model(**inputs).logits[0, positions[0, 0]]
            token = tokenizer.decode(logits.argmax()).strip()
            response = {"token": token}
        except Exception as err:  # protocol requires an answer per line
            response = {"error": str(err)}
        sys.stdout.write(json.dumps(response) + "\n")
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
