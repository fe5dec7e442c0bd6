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

"""Regenerates data/emoji_lexicon.tsv from the `emoji` package's CLDR short names.

Usage: python3 scripts/gen_emoji_lexicon.py > data/emoji_lexicon.tsv
"""
import re
import sys
import unicodedata

import emoji


def phrase(name: str) -> str:
    name = name.strip(":").replace("_", " ")
    name = unicodedata.normalize("NFKD", name)
    name = name.encode("ascii", "ignore").decode("ascii").lower()
    return " ".join(re.sub(r"[^a-z0-9]+", " ", name).split())


def main() -> None:
    out = sys.stdout
    out.write(f"# Unicode emoji -> CLDR short name (emoji {emoji.__version__})\n")
    rows = []
    for seq, data in emoji.EMOJI_DATA.items():
        words = phrase(data["en"])
        if words and "\t" not in seq and not seq.startswith("#"):
            rows.append((seq, words))
    rows.sort(key=lambda r: [ord(c) for c in r[0]])
    for seq, words in rows:
        out.write(f"{seq}\t{words}\n")


if __name__ == "__main__":
    main()
