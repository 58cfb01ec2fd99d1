#!/usr/bin/env python3
# Copyright 2026 The polex Authors.
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

"""Confirms that the fabricated passage in tests/fixtures/llm/fabrication
scores below the hallucination threshold against every paragraph of its
judgment (token LCS over passage length, computed independently here)."""

import os
import re
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
LLM = os.path.join(HERE, "..", "fixtures", "llm")
THRESHOLD = 0.6


def tokens(s):
    s = re.sub(r"\s*\([^()]*\d{4}\)\s*$", "", s.lower().strip())
    return re.findall(r"\w+", s)


def lcs(a, b):
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def main():
    with open(os.path.join(LLM, "corpus", "sentenza_a.txt"), encoding="utf-8") as f:
        paragraphs = [p for p in f.read().split("\n\n") if p.strip()]
    with open(os.path.join(LLM, "fabrication", "sentenza_a.txt"), encoding="utf-8") as f:
        passage = f.read().lstrip("- ").strip()
    t = tokens(passage)
    best = max(lcs(t, tokens(p)) / len(t) for p in paragraphs)
    print(f"best containment {best:.3f} (threshold {THRESHOLD})")
    return 0 if best < THRESHOLD else 1


if __name__ == "__main__":
    sys.exit(main())
