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

"""Writes word<TAB>stem pairs produced by NLTK's English Snowball stemmer.

Words come from the bundled lexicons, a hand list of irregular forms, and
every base word crossed with the suffixes the algorithm knows about.
"""

import pathlib
import random
import re
import sys

from nltk.stem.snowball import SnowballStemmer

ROOT = pathlib.Path(__file__).resolve().parents[2]

HAND = """
caress caresses ponies ties cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical
hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate
cease generous generously generate general generation communication commune
arsenal arsenic skis skies dying lying tying idly gently ugly early only
singly sky news howe atlas cosmos bias andes inning innings outing outings
canning cannings herring herrings earring earrings proceed exceed succeed
proceeding exceeded succeeds consign consigned consigning consignment
consist consisted consistency consistent consistently knack knackeries
knight knightly knights kneel kneeled kneeling tweet tweets tweeting retweet
sad sadness sadly happily happiness angry angrily anger angered fearful
fearing fears joyful joyfully joyous yelling yellow yell lol omg smh ughhh
sooo loooove bestie besties youre dont can't won't it's y'all o'clock
yes yeses eye eyes yay yays ayy aaaaah babyyy crying cried cries
beautiful beautifully beauty beauties terrified terrifying terror horror
horrible horribly disgust disgusting disgusted outrageous outrage outraged
""".split()

SUFFIXES = [
    "", "s", "es", "'s", "s'", "ed", "ing", "ly", "edly", "ingly", "eed", "eedly",
    "ness", "ful", "fulness", "less", "lessli", "ation", "ational", "tional",
    "enci", "anci", "abli", "izer", "ization", "iveness", "ousness", "ousli",
    "aliti", "iviti", "biliti", "bli", "alli", "entli", "eli", "ogi", "fulli",
    "li", "alism", "ator", "ement", "ment", "ent", "ism", "ate", "iti", "ous",
    "ive", "ize", "ance", "ence", "able", "ible", "er", "ic", "al", "ant",
    "ion", "sion", "tion", "icate", "ative", "alize", "ical", "y", "ies", "ied",
    "sses", "us", "ss", "e", "ll", "ously",
]


def words_from_lexicons():
    words = set()
    for name in ("emoji_lexicon.tsv", "emoticon_lexicon.tsv"):
        for line in (ROOT / "data" / name).read_text(encoding="utf-8").splitlines():
            if not line or line.startswith("#") or "\t" not in line:
                continue
            words.update(re.findall(r"[a-z]+", line.split("\t", 1)[1]))
    words.update((ROOT / "data" / "stopwords_en.txt").read_text().split())
    return words


def main():
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "tests/data/stemmer_cases.tsv"
    stemmer = SnowballStemmer("english")
    base = sorted(words_from_lexicons() | set(HAND))
    rng = random.Random(7)
    cases = set(base)
    for w in base:
        for suffix in rng.sample(SUFFIXES, 12):
            cases.add(w + suffix)
    lines = [f"{w}\t{stemmer.stem(w)}" for w in sorted(cases)]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} cases to {out}")


if __name__ == "__main__":
    main()
