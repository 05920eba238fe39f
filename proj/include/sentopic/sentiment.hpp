// Copyright 2026 The Sentopic Authors
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
// limitations under the License.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

// Lexicon-and-rule sentiment scoring on raw social-media text.
//
// The scorer reproduces the published VADER rule set: per-token lexicon
// valence, ALL-CAPS emphasis, degree boosters with distance damping,
// negation within the preceding three tokens, "but" clause reweighting,
// special-case idioms, and '!'/'?' amplification. The compound score is
// s / sqrt(s^2 + 15) over the rule-adjusted valence sum s.
namespace sentopic::sentiment {

inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 4;
inline constexpr double kQuestionIncrement = 0.18;
inline constexpr double kQuestionCap = 0.96;
inline constexpr double kNormalizationAlpha = 15.0;
inline constexpr double kPolarityThreshold = 0.05;

struct SentimentLexicon {
  std::unordered_map<std::string, double> valences;
  std::unordered_map<std::string, double> boosters;
  std::unordered_set<std::string> negations;
  std::unordered_map<std::string, double> idioms;
  // Keyed by a single code point's UTF-8 bytes.
  std::unordered_map<std::string, std::string> emoji_map;

  // Reads `token<TAB>valence` and `emoji<TAB>description` files and fills
  // boosters, negations and idioms with the built-in tables. Duplicate
  // lexicon tokens resolve to the last line. Throws Error(kIo/kData).
  static SentimentLexicon load(const std::filesystem::path& lexicon_tsv,
                               const std::filesystem::path& emoji_tsv);

  // Built-in booster, negation and idiom tables only; no valences.
  static SentimentLexicon builtin_rules();

  bool contains(std::string_view lower_token) const {
    return valences.find(std::string(lower_token)) != valences.end();
  }
};

struct SentimentScore {
  double pos = 0.0;
  double neu = 0.0;
  double neg = 0.0;
  double compound = 0.0;
};

enum class Polarity { kPositive, kNeutral, kNegative };

std::string_view to_string(Polarity p);
// Accepts "positive" / "neutral" / "negative". Throws Error(kData).
Polarity polarity_from_string(std::string_view s);

// Scores raw text (case, punctuation and emoji intact).
SentimentScore score(std::string_view text, const SentimentLexicon& lex);

// positive iff compound >= 0.05, negative iff compound <= -0.05.
Polarity classify(double compound);
inline Polarity classify(const SentimentScore& sc) { return classify(sc.compound); }

// s / sqrt(s^2 + alpha), clamped to [-1, 1].
double normalize(double sum, double alpha = kNormalizationAlpha);

// Lexicon hits among preprocessed tokens, in input order, tagged by the sign
// of their valence (zero-valence entries are tagged neutral).
std::vector<std::pair<std::string, Polarity>> emotional_words(
    std::span<const std::string> tokens, const SentimentLexicon& lex);

}  // namespace sentopic::sentiment
