#!/usr/bin/env python3
# Copyright 2026 The tweetemo Authors.
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
"""Writes a stand-in transformer log-prob stream aligned with an SVM stream.

The fine-tuned transformer is not part of this repository; for fusion tests
we only need a second valid stream over the same ids, with its own error
pattern. Logits are Gaussian noise plus a bonus on the gold class.

    python3 simulate_bert_stream.py svm_test.jsonl bertweet_test.jsonl
"""

import json
import math
import random
import sys


def log_softmax(logits):
    m = max(logits)
    lse = m + math.log(sum(math.exp(x - m) for x in logits))
    return [x - lse for x in logits]


def main(src, dst, seed=2021, bonus=2.4):
    rng = random.Random(seed)
    with open(src, encoding="utf-8") as f:
        records = [json.loads(line) for line in f if line.strip()]
    out = []
    for rec in records:
        classes = sorted(rec["logprobs"])
        logits = [rng.gauss(0.0, 1.0) + (bonus if c == rec["gold"] else 0.0) for c in classes]
        lp = log_softmax(logits)
        out.append({"id": rec["id"], "gold": rec["gold"], "source": "bertweet",
                    "logprobs": dict(zip(classes, lp))})
    rng.shuffle(out)
    with open(dst, "w", encoding="utf-8") as f:
        for rec in out:
            f.write(json.dumps(rec, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
