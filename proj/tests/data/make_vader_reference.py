#!/usr/bin/env python3
# Copyright 2026 The Sentopic Authors
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

"""Writes vader_reference.tsv: unrounded scores from the reference Python
vaderSentiment 3.3.1 for generated rule-exercising sentences plus every
fixture tweet.

Usage: VADER_PATH=<dir containing vaderSentiment 3.3.1> \
    python3 make_vader_reference.py vader_reference.tsv tweets_200.csv
"""

import csv
import os
import random
import sys

sys.path.insert(0, os.environ.get("VADER_PATH", "."))
import vaderSentiment.vaderSentiment as vs
vs.round = lambda x, n=None: x  # keep full precision
from vaderSentiment.vaderSentiment import SentimentIntensityAnalyzer
sia = SentimentIntensityAnalyzer()
rng = random.Random(331)
lex = [w for w in sia.lexicon if ' ' not in w and w.isalpha()]
pos = [w for w in lex if sia.lexicon[w] > 0]
neg = [w for w in lex if sia.lexicon[w] < 0]
neutral = ["the", "vaccine", "today", "centre", "dose", "people", "it", "was", "is", "my", "arm", "queue"]
boosters = ["very", "extremely", "slightly", "barely", "so", "totally", "kind of", "sort of", "hardly", "incredibly", "kinda", "almost"]
negs = ["not", "never", "isn't", "don't", "without", "nor", "cannot", "aint", "no", "none", "wasn't"]
idioms = ["the shit", "the bomb", "bad ass", "badass", "yeah right", "kiss of death", "cut the mustard", "hand to mouth", "the bomb", "beating heart", "bus stop", "upper hand", "break a leg", "at least", "very least", "without doubt", "never so"]
emos = [":)", ":(", ":D", ":-)", ";)", "<3", ":/", "😁", "😢", "💉", "😷", "❤️", "👍", "🙏", "😡", "🎉"]
punct = ["", "", "!", "!!", "!!!", "!!!!!", "?", "??", "???", "????", ".", "...", "?!", "!?"]
def word():
    r = rng.random()
    if r < 0.3: return rng.choice(pos)
    if r < 0.55: return rng.choice(neg)
    return rng.choice(neutral)
def sent():
    n = rng.randint(1, 9)
    toks = []
    for _ in range(n):
        r = rng.random()
        if r < 0.12: toks.append(rng.choice(boosters))
        elif r < 0.24: toks.append(rng.choice(negs))
        elif r < 0.30: toks.append(rng.choice(idioms))
        elif r < 0.36: toks.append(rng.choice(emos))
        elif r < 0.42: toks.append("but")
        else: toks.append(word())
    toks = [t.upper() if rng.random() < 0.12 else t for t in toks]
    if rng.random() < 0.3: toks[0] = toks[0].capitalize()
    s = " ".join(toks)
    if rng.random() < 0.2:
        i = rng.randrange(len(s) + 1); s = s[:i] + rng.choice([",", ";", " - "]) + s[i:]
    return s + rng.choice(punct)
texts = set()
fixed = ["VADER is smart, handsome, and funny.", "VADER is not smart, handsome, nor funny.",
 "VADER is VERY SMART, handsome, and FUNNY.", "The book was good.", "At least it isn't a horrible book.",
 "The plot was good, but the characters are uncompelling and the dialog is not great.",
 "Today only kinda sux! But I'll get by, lol", "Make sure you :) or :D today!", "Not bad at all",
 "Today SUX!", "no", "no!", "No way", "not the shit", "kind of good", "least good", "the least bad",
 "very least good", "never so good", "without doubt good", "never not good", "I LOVE it", "LOVE", "love love LOVE",
 "😁😁😁", "💘 and 💋", "It was the bomb but the upper hand was lost", "", "   ", "!!!", "???", "?", "ok?", "good???", "good????",
 "GOOD!!!!", "Bad, BAD, bad.", "but", "but good", "good but", "good but bad but great", "BUT good", "fine ... but not great",
 "she's no good", "no, good", "nope bad", "ain't bad", "cannot stand it", "can't stand the pain",
 "kinda sorta good", "sort of bad", "yeah right", "it's the shit!", "such a badass :)", "'good'", "(great)", "good-bad", "x:D", ":D:D",
 "I'm feeling good... not!", "Not that good", "not really good", "not very good", "NOT GOOD", "never ever good",
 "The vaccine is effective and safe", "side effects were terrible", "thank you nurses! ❤️", "2nd dose done 💉💉"]
for t in fixed: texts.add(t)
while len(texts) < 1000:
    texts.add(sent())
with open(sys.argv[2]) as f:
    for row in csv.DictReader(f):
        t = row.get("text") or ""
        if "\t" not in t and "\n" not in t: texts.add(t)
out = open(sys.argv[1], "w", encoding="utf-8")
out.write("# text<TAB>pos<TAB>neu<TAB>neg<TAB>compound, unrounded, from the reference vaderSentiment 3.3.1 implementation\n")
n=0
for t in sorted(texts):
    if "\t" in t or "\n" in t: continue
    s = sia.polarity_scores(t)
    out.write("\t".join([t] + [repr(x) for x in (s["pos"], s["neu"], s["neg"], s["compound"])]) + "\n"); n+=1
print(n)
