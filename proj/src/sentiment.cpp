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

#include "sentopic/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "sentopic/error.hpp"
#include "sentopic/tsv.hpp"
#include "sentopic/unicode.hpp"

namespace sentopic::sentiment {

namespace {

constexpr std::string_view kNegations[] = {
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing", "nowhere",
    "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
    "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
    "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite"};

constexpr std::string_view kBoostersUp[] = {
    "absolutely", "amazingly", "awfully", "completely", "considerable", "considerably",
    "decidedly", "deeply", "effing", "enormous", "enormously", "entirely", "especially",
    "exceptional", "exceptionally", "extreme", "extremely", "fabulously", "flipping",
    "flippin", "frackin", "fracking", "fricking", "frickin", "frigging", "friggin",
    "fully", "fuckin", "fucking", "fuggin", "fugging", "greatly", "hella", "highly",
    "hugely", "incredible", "incredibly", "intensely", "major", "majorly", "more",
    "most", "particularly", "purely", "quite", "really", "remarkably", "so",
    "substantially", "thoroughly", "total", "totally", "tremendous", "tremendously",
    "uber", "unbelievably", "unusually", "utter", "utterly", "very"};

constexpr std::string_view kBoostersDown[] = {
    "almost", "barely", "hardly", "just enough", "kind of", "kinda", "kindof",
    "kind-of", "less", "little", "marginal", "marginally", "occasional",
    "occasionally", "partly", "scarce", "scarcely", "slight", "slightly", "somewhat",
    "sort of", "sorta", "sortof", "sort-of"};

constexpr std::pair<std::string_view, double> kIdioms[] = {
    {"the shit", 3.0},      {"the bomb", 3.0},        {"bad ass", 1.5},
    {"badass", 1.5},        {"bus stop", 0.0},        {"yeah right", -2.0},
    {"kiss of death", -1.5}, {"to die for", 3.0}};

constexpr std::string_view kAsciiPunctuation = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

// A whitespace-delimited token with leading/trailing ASCII punctuation
// removed, unless that leaves two or fewer code points (emoticons).
std::string strip_punct_if_word(const std::string& token) {
  const auto first = token.find_first_not_of(kAsciiPunctuation);
  if (first == std::string::npos) return token;
  const auto last = token.find_last_not_of(kAsciiPunctuation);
  std::string stripped = token.substr(first, last - first + 1);
  if (unicode::length(stripped) <= 2) return token;
  return stripped;
}

struct Token {
  std::string text;
  std::string lower;
  bool all_caps;
};

class Scorer {
 public:
  Scorer(const SentimentLexicon& lex, std::vector<Token> tokens)
      : lex_(lex), tokens_(std::move(tokens)) {
    std::size_t caps = 0;
    for (const auto& t : tokens_) caps += t.all_caps ? 1 : 0;
    const std::size_t diff = tokens_.size() - caps;
    cap_differential_ = diff > 0 && diff < tokens_.size();
  }

  std::vector<double> valences() const {
    std::vector<double> sentiments;
    sentiments.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const auto& lw = tokens_[i].lower;
      if (is_booster(lw)) {
        sentiments.push_back(0.0);
        continue;
      }
      if (i + 1 < tokens_.size() && lw == "kind" && tokens_[i + 1].lower == "of") {
        sentiments.push_back(0.0);
        continue;
      }
      sentiments.push_back(token_valence(i));
    }
    but_check(sentiments);
    return sentiments;
  }

 private:
  bool in_lexicon(const std::string& lower) const { return lex_.valences.count(lower) != 0; }
  bool is_booster(const std::string& lower) const { return lex_.boosters.count(lower) != 0; }

  bool negated(const std::string& lower) const {
    return lex_.negations.count(lower) != 0 || lower.find("n't") != std::string::npos;
  }

  const std::string& lw(std::size_t i) const { return tokens_[i].lower; }

  double scalar_inc_dec(const Token& word, double valence) const {
    double scalar = 0.0;
    const auto it = lex_.boosters.find(word.lower);
    if (it != lex_.boosters.end()) {
      scalar = it->second;
      if (valence < 0) scalar *= -1;
      if (word.all_caps && cap_differential_) {
        scalar += valence > 0 ? kCapsIncrement : -kCapsIncrement;
      }
    }
    return scalar;
  }

  double token_valence(std::size_t i) const {
    const auto it = lex_.valences.find(lw(i));
    if (it == lex_.valences.end()) return 0.0;
    const double base = it->second;
    double valence = base;

    // "no" directly before another lexicon word acts as a negator, not as
    // its own sentiment.
    if (lw(i) == "no" && i + 1 < tokens_.size() && in_lexicon(lw(i + 1))) valence = 0.0;
    if ((i > 0 && lw(i - 1) == "no") || (i > 1 && lw(i - 2) == "no") ||
        (i > 2 && lw(i - 3) == "no" && (lw(i - 1) == "or" || lw(i - 1) == "nor"))) {
      valence = base * kNegationScalar;
    }

    if (tokens_[i].all_caps && cap_differential_) {
      valence += valence > 0 ? kCapsIncrement : -kCapsIncrement;
    }

    for (std::size_t start = 0; start < 3; ++start) {
      if (i > start && !in_lexicon(lw(i - (start + 1)))) {
        double s = scalar_inc_dec(tokens_[i - (start + 1)], valence);
        if (start == 1 && s != 0) s *= 0.95;
        if (start == 2 && s != 0) s *= 0.9;
        valence += s;
        valence = negation_check(valence, start, i);
        if (start == 2) valence = special_idioms_check(valence, i);
      }
    }
    return least_check(valence, i);
  }

  double negation_check(double valence, std::size_t start, std::size_t i) const {
    const auto is_so_this = [](const std::string& w) { return w == "so" || w == "this"; };
    if (start == 0) {
      if (negated(lw(i - 1))) valence *= kNegationScalar;
    } else if (start == 1) {
      if (lw(i - 2) == "never" && is_so_this(lw(i - 1))) {
        valence *= 1.25;
      } else if (lw(i - 2) == "without" && lw(i - 1) == "doubt") {
      } else if (negated(lw(i - 2))) {
        valence *= kNegationScalar;
      }
    } else {
      if ((lw(i - 3) == "never" && is_so_this(lw(i - 2))) || is_so_this(lw(i - 1))) {
        valence *= 1.25;
      } else if (lw(i - 3) == "without" && (lw(i - 2) == "doubt" || lw(i - 1) == "doubt")) {
      } else if (negated(lw(i - 3))) {
        valence *= kNegationScalar;
      }
    }
    return valence;
  }

  // Requires i >= 3.
  double special_idioms_check(double valence, std::size_t i) const {
    const auto join = [](std::initializer_list<std::string_view> parts) {
      std::string s;
      for (const auto p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
      }
      return s;
    };
    const std::string onezero = join({lw(i - 1), lw(i)});
    const std::string twoonezero = join({lw(i - 2), lw(i - 1), lw(i)});
    const std::string twoone = join({lw(i - 2), lw(i - 1)});
    const std::string threetwoone = join({lw(i - 3), lw(i - 2), lw(i - 1)});
    const std::string threetwo = join({lw(i - 3), lw(i - 2)});

    for (const auto* seq : {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
      const auto it = lex_.idioms.find(*seq);
      if (it != lex_.idioms.end()) {
        valence = it->second;
        break;
      }
    }
    if (tokens_.size() - 1 > i) {
      const auto it = lex_.idioms.find(join({lw(i), lw(i + 1)}));
      if (it != lex_.idioms.end()) valence = it->second;
    }
    if (tokens_.size() - 1 > i + 1) {
      const auto it = lex_.idioms.find(join({lw(i), lw(i + 1), lw(i + 2)}));
      if (it != lex_.idioms.end()) valence = it->second;
    }
    for (const auto* ngram : {&threetwoone, &threetwo, &twoone}) {
      const auto it = lex_.boosters.find(*ngram);
      if (it != lex_.boosters.end()) valence += it->second;
    }
    return valence;
  }

  double least_check(double valence, std::size_t i) const {
    if (i > 1 && !in_lexicon(lw(i - 1)) && lw(i - 1) == "least") {
      if (lw(i - 2) != "at" && lw(i - 2) != "very") valence *= kNegationScalar;
    } else if (i > 0 && !in_lexicon(lw(i - 1)) && lw(i - 1) == "least") {
      valence *= kNegationScalar;
    }
    return valence;
  }

  // Each update lands on the first slot holding an equal value, as in the
  // reference implementation; this keeps scores identical to it when equal
  // valences straddle the conjunction.
  void but_check(std::vector<double>& sentiments) const {
    std::size_t bi = tokens_.size();
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].lower == "but") {
        bi = i;
        break;
      }
    }
    if (bi == tokens_.size()) return;
    for (std::size_t p = 0; p < sentiments.size(); ++p) {
      const double v = sentiments[p];
      const auto si = static_cast<std::size_t>(
          std::find(sentiments.begin(), sentiments.end(), v) - sentiments.begin());
      if (si < bi) {
        sentiments[si] = v * 0.5;
      } else if (si > bi) {
        sentiments[si] = v * 1.5;
      }
    }
  }

  const SentimentLexicon& lex_;
  std::vector<Token> tokens_;
  bool cap_differential_ = false;
};

std::string replace_emoji(std::string_view text, const SentimentLexicon& lex) {
  if (lex.emoji_map.empty()) return std::string(text);
  std::string out;
  out.reserve(text.size());
  bool prev_space = true;
  for (const auto& cp : unicode::decode(text)) {
    const auto bytes = text.substr(cp.offset, cp.length);
    const auto it = cp.value >= 0x80 ? lex.emoji_map.find(std::string(bytes))
                                     : lex.emoji_map.end();
    if (it != lex.emoji_map.end()) {
      if (!prev_space) out += ' ';
      out += it->second;
      prev_space = false;
    } else {
      out += bytes;
      prev_space = cp.value == U' ';
    }
  }
  return out;
}

double punctuation_emphasis(std::string_view text) {
  const auto ep = std::min<std::ptrdiff_t>(std::count(text.begin(), text.end(), '!'),
                                           kMaxExclamations);
  const auto qm = std::count(text.begin(), text.end(), '?');
  double qm_amp = 0.0;
  if (qm > 1) qm_amp = qm <= 3 ? static_cast<double>(qm) * kQuestionIncrement : kQuestionCap;
  return static_cast<double>(ep) * kExclamationIncrement + qm_amp;
}

}  // namespace

SentimentLexicon SentimentLexicon::builtin_rules() {
  SentimentLexicon lex;
  for (const auto w : kBoostersUp) lex.boosters.emplace(w, kBoosterIncrement);
  for (const auto w : kBoostersDown) lex.boosters.emplace(w, -kBoosterIncrement);
  for (const auto w : kNegations) lex.negations.emplace(w);
  for (const auto& [phrase, v] : kIdioms) lex.idioms.emplace(phrase, v);
  return lex;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& lexicon_tsv,
                                        const std::filesystem::path& emoji_tsv) {
  SentimentLexicon lex = builtin_rules();
  for (auto& [token, value] : read_tsv_pairs(lexicon_tsv)) {
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw_data(lexicon_tsv.string() + ": bad valence for '" + token + "'");
    }
    if (!(v >= -4.0 && v <= 4.0)) {
      throw_data(lexicon_tsv.string() + ": valence out of [-4, 4] for '" + token + "'");
    }
    lex.valences.insert_or_assign(std::move(token), v);
  }
  if (!emoji_tsv.empty()) {
    for (auto& [emoji, description] : read_tsv_pairs(emoji_tsv)) {
      lex.emoji_map.insert_or_assign(std::move(emoji), std::move(description));
    }
  }
  return lex;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNeutral: return "neutral";
    case Polarity::kNegative: return "negative";
  }
  return "neutral";
}

Polarity polarity_from_string(std::string_view s) {
  if (s == "positive") return Polarity::kPositive;
  if (s == "neutral") return Polarity::kNeutral;
  if (s == "negative") return Polarity::kNegative;
  throw_data("unknown polarity '" + std::string(s) + "'");
}

double normalize(double sum, double alpha) {
  const double norm = sum / std::sqrt(sum * sum + alpha);
  return std::clamp(norm, -1.0, 1.0);
}

SentimentScore score(std::string_view text, const SentimentLexicon& lex) {
  const std::string replaced = replace_emoji(text, lex);
  const std::string_view cleaned = unicode::trim(replaced);

  std::vector<Token> tokens;
  for (auto& raw : unicode::split_whitespace(cleaned)) {
    Token t;
    t.text = strip_punct_if_word(raw);
    t.lower = unicode::to_lower(t.text);
    t.all_caps = unicode::is_all_caps(t.text);
    tokens.push_back(std::move(t));
  }
  if (tokens.empty()) return {};

  const std::vector<double> sentiments = Scorer(lex, std::move(tokens)).valences();

  double sum = 0.0;
  for (const double s : sentiments) sum += s;
  const double punct = punctuation_emphasis(cleaned);
  if (sum > 0) {
    sum += punct;
  } else if (sum < 0) {
    sum -= punct;
  }

  SentimentScore out;
  out.compound = normalize(sum);

  // Each nonzero valence counts one extra unit so that neutral tokens,
  // which count as 1, stay comparable.
  double pos_sum = 0.0;
  double neg_sum = 0.0;
  double neu_count = 0.0;
  for (const double s : sentiments) {
    if (s > 0) pos_sum += s + 1;
    if (s < 0) neg_sum += s - 1;
    if (s == 0) neu_count += 1;
  }
  if (pos_sum > std::fabs(neg_sum)) {
    pos_sum += punct;
  } else if (pos_sum < std::fabs(neg_sum)) {
    neg_sum -= punct;
  }
  const double total = pos_sum + std::fabs(neg_sum) + neu_count;
  out.pos = std::fabs(pos_sum / total);
  out.neg = std::fabs(neg_sum / total);
  out.neu = std::fabs(neu_count / total);
  return out;
}

Polarity classify(double compound) {
  if (compound >= kPolarityThreshold) return Polarity::kPositive;
  if (compound <= -kPolarityThreshold) return Polarity::kNegative;
  return Polarity::kNeutral;
}

std::vector<std::pair<std::string, Polarity>> emotional_words(
    std::span<const std::string> tokens, const SentimentLexicon& lex) {
  std::vector<std::pair<std::string, Polarity>> out;
  for (const auto& token : tokens) {
    const auto it = lex.valences.find(token);
    if (it == lex.valences.end()) continue;
    const double v = it->second;
    out.emplace_back(token, v > 0   ? Polarity::kPositive
                            : v < 0 ? Polarity::kNegative
                                    : Polarity::kNeutral);
  }
  return out;
}

}  // namespace sentopic::sentiment
