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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sentopic/corpus.hpp"
#include "sentopic/preprocess.hpp"
#include "sentopic/sentiment.hpp"
#include "sentopic/topicmodel.hpp"

// Corpus aggregations: frequent terms, word-cloud weights, per-brand
// emotional words, country x brand polarity counts and per-polarity topic
// popularity. Every function is pure; ties always break lexicographically
// or by smallest index so reruns are byte-identical.
namespace sentopic::analytics {

using preprocess::Document;
using sentiment::Polarity;

inline constexpr std::string_view kUntagged = "(untagged)";
inline constexpr std::string_view kUnknownCountry = "(unknown)";

struct Scope {
  enum class Kind { kGlobal, kCountry, kBrand, kPolarity };
  Kind kind = Kind::kGlobal;
  std::string value;  // country code, brand name or polarity name

  static Scope global() { return {}; }
  static Scope country(std::string code) { return {Kind::kCountry, std::move(code)}; }
  static Scope brand(corpus::Brand b) { return {Kind::kBrand, std::string(corpus::brand_name(b))}; }
  static Scope polarity(Polarity p) { return {Kind::kPolarity, std::string(sentiment::to_string(p))}; }

  // "global", "country:IN", "brand:Moderna", "polarity:positive".
  std::string describe() const;
};

struct TermCount {
  std::string term;
  std::size_t count = 0;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

// Sorted by count descending, ties lexicographic.
struct FrequencyTable {
  Scope scope;
  std::vector<TermCount> entries;
};

// Counts tokens over the documents inside `scope` and keeps the first n.
// A polarity scope needs `polarities` parallel to `docs`. Throws
// Error(kUsage) if n == 0 or the polarities are missing or misaligned.
FrequencyTable top_terms(std::span<const Document> docs, std::size_t n, const Scope& scope,
                         std::span<const Polarity> polarities = {});

// weight = count / max count, order preserved. Empty table -> empty list.
std::vector<std::pair<std::string, double>> wordcloud_weights(const FrequencyTable& table);

struct EmotionalWords {
  corpus::Brand brand{};
  std::vector<TermCount> positive;
  std::vector<TermCount> negative;
  std::vector<TermCount> neutral;
};

// For every brand: counts lexicon hits in the brand's documents, keeps the
// `top` most frequent and splits them by valence sign. Brands without
// documents get empty lists.
std::vector<EmotionalWords> emotional_top_words(std::span<const Document> docs,
                                                const sentiment::SentimentLexicon& lex,
                                                std::size_t top = 30);

struct PolarityCounts {
  std::size_t positive = 0;
  std::size_t neutral = 0;
  std::size_t negative = 0;

  std::size_t total() const { return positive + neutral + negative; }
  void add(Polarity p);
  // positive, neutral, negative shares; all zero for an empty cell.
  std::array<double, 3> proportions() const;
};

struct SentimentDistribution {
  std::string country;  // code or kUnknownCountry
  std::string brand;    // brand name or kUntagged
  PolarityCounts counts;
};

struct DistributionReport {
  // Every observed country x (seven brands + untagged), countries sorted,
  // brands in declaration order with the untagged cell last.
  std::vector<SentimentDistribution> cells;
  // One count per tweet, regardless of how many brands it mentions.
  std::vector<std::pair<std::string, PolarityCounts>> country_totals;
  PolarityCounts overall;

  // Zero counts for a cell that does not exist.
  PolarityCounts cell(std::string_view country, std::string_view brand) const;
};

// A tweet tagged with several brands counts once in each brand's cell.
// Throws Error(kUsage) if the spans differ in length.
DistributionReport sentiment_distribution(std::span<const corpus::Tweet> tweets,
                                          std::span<const Polarity> polarities);

struct CountryShare {
  std::string country;
  std::size_t count = 0;
  double share = 0.0;
};

// Tweets per country, count descending, ties by code.
std::vector<CountryShare> country_shares(std::span<const corpus::Tweet> tweets);

struct TopicCount {
  std::size_t topic = 0;
  std::size_t count = 0;
  std::vector<std::string> words;
};

struct TopicRanking {
  Polarity polarity{};
  std::size_t total = 0;           // documents of this polarity
  std::vector<TopicCount> ranked;  // every topic, count descending, ties by index
};

// Each document goes to its dominant topic; counts are taken separately
// over positive and negative documents. `polarities` must be parallel to
// the model's documents, otherwise Error(kUsage).
std::pair<TopicRanking, TopicRanking> topic_popularity(const lda::TopicModel& model,
                                                       std::span<const Polarity> polarities,
                                                       std::size_t top_words = 10);

nlohmann::json to_json(const FrequencyTable& t);
nlohmann::json to_json(const std::vector<EmotionalWords>& words);
nlohmann::json to_json(const DistributionReport& r);
nlohmann::json to_json(const TopicRanking& r, std::size_t limit);
nlohmann::json to_json(const std::vector<CountryShare>& shares);

// country,brand,positive,neutral,negative,total,p_positive,p_neutral,p_negative
std::string distribution_csv(const DistributionReport& r);
// rank,term,count,weight
std::string frequency_csv(const FrequencyTable& t);

// Horizontal stacked bars, one per non-empty cell, segment widths
// proportional to the polarity counts.
std::string distribution_svg(const DistributionReport& r);

}  // namespace sentopic::analytics
