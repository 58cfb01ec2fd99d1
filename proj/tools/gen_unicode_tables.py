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
"""Generates src/text/unicode_tables.cc.

The rule engine reproduces Python `re` character-class semantics for str
patterns, so the tables are derived from the running interpreter's `re`
module rather than from raw UCD files:

  word   - codepoints matched by r'\\w'
  digit  - codepoints matched by r'\\d'
  lower  - simple lowercase mapping (str.lower() when it yields one char)
"""

import re
import sys

MAX = 0x110000


LICENSE = """// Copyright 2026 The polex Authors.
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
// limitations under the License.\n\n"""


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX - 1))
    return out


def emit_ranges(name, rs):
    lines = [f"constexpr CodepointRange {name}[] = {{"]
    for a, b in rs:
        lines.append(f"    {{0x{a:X}, 0x{b:X}}},")
    lines.append("};")
    return "\n".join(lines)


def main():
    word_re = re.compile(r"\w")
    digit_re = re.compile(r"\d")
    word = ranges(lambda cp: word_re.match(chr(cp)) is not None)
    digit = ranges(lambda cp: digit_re.match(chr(cp)) is not None)

    lower = []
    for cp in range(MAX):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            lower.append((cp, ord(lo)))

    out = sys.stdout
    out.write(LICENSE)
    out.write("// Generated by tools/gen_unicode_tables.py (Python %s). Do not edit.\n\n"
              % sys.version.split()[0])
    out.write('#include "text/unicode_tables.h"\n\n')
    out.write("namespace polex::text::tables {\n\n")
    out.write(emit_ranges("kWordRanges", word) + "\n\n")
    out.write(emit_ranges("kDigitRanges", digit) + "\n\n")
    out.write("constexpr CaseMapping kLowerMappings[] = {\n")
    for a, b in lower:
        out.write(f"    {{0x{a:X}, 0x{b:X}}},\n")
    out.write("};\n\n")
    out.write("std::span<const CodepointRange> word_ranges() { return kWordRanges; }\n")
    out.write("std::span<const CodepointRange> digit_ranges() { return kDigitRanges; }\n")
    out.write("std::span<const CaseMapping> lower_mappings() { return kLowerMappings; }\n\n")
    out.write("}  // namespace polex::text::tables\n")


if __name__ == "__main__":
    main()
