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

"""Writes tweets_200.csv, the synthetic end-to-end fixture.

The file is committed; rerunning this script must reproduce it byte for
byte. Row mix: 200 data rows, of which 20 have an empty or blank location,
8 an unresolvable location, 4 are malformed (bad date, empty id, empty
text, wrong field count) and 3 repeat an earlier id.
"""

import csv
import io
import random

RNG = random.Random(2021)

LOCATIONS = [
    "New Delhi, India", "Mumbai", "Bengaluru, India", "Chennai", "India",
    "London, England", "Scotland", "Toronto, Canada", "Ontario", "USA",
    "New York", "Texas", "Karachi, Pakistan", "Dubai, UAE", "Lagos, Nigeria",
    "Sydney, Australia", "Moscow, Russia", "Manila, Philippines", "Nairobi", "Singapore",
]
# India-heavy, as in the source corpus.
LOCATION_WEIGHTS = [8, 6, 4, 3, 5, 4, 1, 3, 1, 3, 2, 1, 2, 2, 1, 1, 1, 1, 1, 1]
UNRESOLVED = ["Earth", "somewhere over the rainbow", "Planet Earth", "Home", "Worldwide",
              "the moon", "Everywhere", "Wherever you are"]

BRANDS = ["Pfizer", "BioNTech", "Sinopharm", "Sinovac", "AstraZeneca", "Covishield",
          "Moderna", "Covaxin", "Sputnik V"]

OPENERS = [
    "Got my first dose of {b} today",
    "Second dose of {b} done",
    "Just received the {b} vaccine",
    "My parents got {b} this morning",
    "Booked a slot for {b} at the vaccination centre",
    "The {b} jab was quick",
    "Waiting in line for {b}",
    "Is {b} safe for people over sixty",
]
POSITIVE_WORDS = ["great", "grateful", "thank", "happy", "relieved", "smooth", "kind", "helpful",
                  "excited", "proud", "effective", "safe", "amazing", "hope", "love", "good"]
NEGATIVE_WORDS = ["terrible", "headache", "fever", "painful", "angry", "worried", "scared", "sad",
                  "awful", "frustrating", "worst", "poor", "tired", "sick", "chaos", "problem"]
NEUTRAL_WORDS = ["centre", "queue", "nurse", "doctor", "registration", "portal", "appointment",
                 "family", "arm", "morning", "week", "card", "slot", "government", "hospital",
                 "mother", "staff", "scientists", "supply", "shipment", "dose", "data", "trial"]
EXTRAS = ["", "", "", " https://t.co/x{n}", " @HealthMin{n}", " #vaccine", " #CovidVaccine 💉",
          " 😊", " 😷", "!!", " :(", " :)", " #GetVaccinated @WHO"]


def body():
    pool = RNG.choice([POSITIVE_WORDS, POSITIVE_WORDS, NEGATIVE_WORDS, NEUTRAL_WORDS])
    words = RNG.sample(pool, RNG.randint(2, 3)) + RNG.sample(NEUTRAL_WORDS, RNG.randint(1, 3))
    RNG.shuffle(words)
    if RNG.random() < 0.3:
        words.insert(RNG.randrange(len(words) + 1), RNG.choice(["side effect", "side effects"]))
    return " ".join(words)


def text_for(i):
    brand = RNG.choice(BRANDS)
    if i % 17 == 0:
        brand = brand + " and " + RNG.choice(BRANDS)
    if i % 23 == 0:
        return "{} done!".format(brand)  # short after preprocessing
    opener = RNG.choice(OPENERS).format(b=brand)
    text = body()
    extra = RNG.choice(EXTRAS).format(n=i)
    if i % 29 == 0:
        text = text.upper()
    return "{}, {}{}".format(opener, text, extra)


def main():
    rows = []
    start = 1376000000000000000
    for i in range(200):
        tid = str(start + i * 7919)
        day = 1 + i % 28
        date = "2021-0{}-{:02d} {:02d}:{:02d}:{:02d}".format(3 + i % 4, day, i % 24, (i * 7) % 60,
                                                               (i * 13) % 60)
        loc = RNG.choices(LOCATIONS, LOCATION_WEIGHTS)[0]
        rows.append([tid, "user{}".format(i), loc, date, text_for(i), ""])

    for i in range(0, 200, 10):  # 20 empty or blank locations
        rows[i][2] = "" if i % 20 == 0 else "   "
    for n, i in enumerate(range(7, 200, 25)):  # 8 unresolvable
        rows[i][2] = UNRESOLVED[n]
    rows[33][3] = "yesterday"  # malformed: bad date
    rows[67][0] = ""           # malformed: empty id
    rows[101][4] = "   "       # malformed: blank text
    rows[143] = rows[143][:4]  # malformed: too few fields
    for src, dst in ((1, 198), (2, 197), (3, 196)):  # duplicate ids
        rows[dst][0] = rows[src][0]

    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["id", "user_name", "user_location", "date", "text", "hashtags"])
    w.writerows(rows)
    with open("tweets_200.csv", "w", encoding="utf-8", newline="") as f:
        f.write(out.getvalue())


if __name__ == "__main__":
    main()
