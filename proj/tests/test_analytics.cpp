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

#include "sentopic/analytics.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "sentopic/error.hpp"
#include "test_util.hpp"

namespace sentopic::analytics {
namespace {

using corpus::Brand;
using Tokens = std::vector<std::string>;

Document doc(Tokens tokens, std::optional<std::string> country = {},
             std::initializer_list<Brand> brands = {}) {
  Document d;
  d.tokens = std::move(tokens);
  d.country = std::move(country);
  for (const auto b : brands) d.brands.insert(b);
  return d;
}

corpus::Tweet tweet(std::string id, std::optional<std::string> country,
                    std::initializer_list<Brand> brands = {}) {
  corpus::Tweet t;
  t.id = std::move(id);
  t.country = std::move(country);
  for (const auto b : brands) t.brands.insert(b);
  return t;
}

std::vector<Document> sample_docs() {
  return {
      doc({"vaccine", "dose", "vaccine", "thank"}, "IN", {Brand::kCovaxin}),
      doc({"vaccine", "pain", "arm", "dose"}, "IN", {Brand::kPfizerBioNTech}),
      doc({"vaccine", "fever", "pain", "arm"}, "GB", {Brand::kPfizerBioNTech, Brand::kModerna}),
      doc({"nurse", "thank", "thank", "safe"}, "US", {}),
  };
}

TEST(TopTerms, GlobalCountsAndTies) {
  const auto docs = sample_docs();
  const auto t = top_terms(docs, 4, Scope::global());
  ASSERT_EQ(t.entries.size(), 4u);
  EXPECT_EQ(t.entries[0], (TermCount{"vaccine", 4}));
  EXPECT_EQ(t.entries[1], (TermCount{"thank", 3}));
  // arm, dose and pain all have 2: lexicographic.
  EXPECT_EQ(t.entries[2], (TermCount{"arm", 2}));
  EXPECT_EQ(t.entries[3], (TermCount{"dose", 2}));
  EXPECT_EQ(top_terms(docs, 100, Scope::global()).entries.size(), 8u);
}

TEST(TopTerms, Scopes) {
  const auto docs = sample_docs();
  const auto in = top_terms(docs, 10, Scope::country("IN"));
  EXPECT_EQ(in.entries[0], (TermCount{"vaccine", 3}));
  EXPECT_EQ(in.scope.describe(), "country:IN");
  const auto pf = top_terms(docs, 10, Scope::brand(Brand::kPfizerBioNTech));
  EXPECT_EQ(pf.entries[0], (TermCount{"arm", 2}));
  EXPECT_TRUE(top_terms(docs, 10, Scope::country("FR")).entries.empty());

  const std::vector<Polarity> pol = {Polarity::kPositive, Polarity::kNegative, Polarity::kNegative,
                                     Polarity::kPositive};
  const auto pos = top_terms(docs, 1, Scope::polarity(Polarity::kPositive), pol);
  EXPECT_EQ(pos.entries[0], (TermCount{"thank", 3}));
  EXPECT_EQ(pos.scope.describe(), "polarity:positive");
  EXPECT_THROW(top_terms(docs, 1, Scope::polarity(Polarity::kPositive)), Error);
  EXPECT_THROW(top_terms(docs, 0, Scope::global()), Error);
}

TEST(TopTerms, PrefixProperty) {
  const auto docs = sample_docs();
  for (std::size_t n = 1; n < 9; ++n) {
    const auto a = top_terms(docs, n, Scope::global()).entries;
    const auto b = top_terms(docs, n + 1, Scope::global()).entries;
    ASSERT_LE(a.size(), b.size());
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST(Wordcloud, Ratios) {
  FrequencyTable t;
  t.entries = {{"vaccine", 100}, {"dose", 50}};
  const auto w = wordcloud_weights(t);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], std::make_pair(std::string("vaccine"), 1.0));
  EXPECT_EQ(w[1], std::make_pair(std::string("dose"), 0.5));

  t.entries = {{"solo", 3}};
  EXPECT_EQ(wordcloud_weights(t)[0].second, 1.0);
  t.entries.clear();
  EXPECT_TRUE(wordcloud_weights(t).empty());
}

TEST(EmotionalTopWords, SplitsBySign) {
  std::vector<Document> docs;
  for (int i = 0; i < 40; ++i) docs.push_back(doc({"thank", "dose"}, "IN", {Brand::kModerna}));
  for (int i = 0; i < 10; ++i) docs.push_back(doc({"pain", "arm"}, "IN", {Brand::kModerna}));
  docs.push_back(doc({"queue", "slot"}, "IN", {Brand::kSinovac}));
  const auto out = emotional_top_words(docs, sentopic::testing::lexicon());
  ASSERT_EQ(out.size(), corpus::kBrandCount);
  for (const auto& e : out) {
    if (e.brand == Brand::kModerna) {
      EXPECT_EQ(e.positive, (std::vector<TermCount>{{"thank", 40}}));
      EXPECT_EQ(e.negative, (std::vector<TermCount>{{"pain", 10}}));
      EXPECT_TRUE(e.neutral.empty());
    } else {
      EXPECT_TRUE(e.positive.empty() && e.negative.empty() && e.neutral.empty());
    }
  }
}

TEST(SentimentDistribution, PfizerIndiaCell) {
  std::vector<corpus::Tweet> tweets;
  std::vector<Polarity> pol;
  for (int i = 0; i < 3; ++i) {
    tweets.push_back(tweet("p" + std::to_string(i), "IN", {Brand::kPfizerBioNTech}));
    pol.push_back(Polarity::kPositive);
  }
  tweets.push_back(tweet("n", "IN", {Brand::kPfizerBioNTech}));
  pol.push_back(Polarity::kNegative);
  const auto r = sentiment_distribution(tweets, pol);
  const auto c = r.cell("IN", "Pfizer/BioNTech");
  EXPECT_EQ(c.positive, 3u);
  EXPECT_EQ(c.neutral, 0u);
  EXPECT_EQ(c.negative, 1u);
  EXPECT_EQ(r.cell("IN", "Moderna").total(), 0u);
  EXPECT_EQ(r.cell("FR", "Moderna").total(), 0u);
  EXPECT_EQ(r.cells.size(), corpus::kBrandCount + 1);
  EXPECT_EQ(r.cells.back().brand, kUntagged);
}

TEST(SentimentDistribution, MultiBrandAndUntagged) {
  const std::vector<corpus::Tweet> tweets = {
      tweet("1", "GB", {Brand::kPfizerBioNTech, Brand::kModerna}),
      tweet("2", "GB", {}),
      tweet("3", std::nullopt, {Brand::kCovaxin}),
  };
  const std::vector<Polarity> pol = {Polarity::kNegative, Polarity::kNeutral, Polarity::kPositive};
  const auto r = sentiment_distribution(tweets, pol);
  EXPECT_EQ(r.cell("GB", "Pfizer/BioNTech").negative, 1u);
  EXPECT_EQ(r.cell("GB", "Moderna").negative, 1u);
  EXPECT_EQ(r.cell("GB", kUntagged).neutral, 1u);
  EXPECT_EQ(r.cell(kUnknownCountry, "Covaxin").positive, 1u);
  // Per-tweet totals partition the corpus even though cells double count.
  EXPECT_EQ(r.overall.total(), 3u);
  std::size_t country_sum = 0;
  for (const auto& [c, counts] : r.country_totals) country_sum += counts.total();
  EXPECT_EQ(country_sum, 3u);
  std::size_t cell_sum = 0;
  for (const auto& c : r.cells) cell_sum += c.counts.total();
  EXPECT_EQ(cell_sum, 4u);
  EXPECT_THROW(sentiment_distribution(tweets, std::span<const Polarity>(pol).first(2)), Error);
}

TEST(PolarityCounts, Proportions) {
  PolarityCounts c;
  EXPECT_EQ(c.proportions(), (std::array<double, 3>{0, 0, 0}));
  c.add(Polarity::kPositive);
  c.add(Polarity::kPositive);
  c.add(Polarity::kNeutral);
  c.add(Polarity::kNegative);
  EXPECT_EQ(c.proportions(), (std::array<double, 3>{0.5, 0.25, 0.25}));
}

TEST(CountryShares, SortedByCountThenCode) {
  const std::vector<corpus::Tweet> tweets = {tweet("1", "US"), tweet("2", "IN"), tweet("3", "IN"),
                                             tweet("4", "GB")};
  const auto s = country_shares(tweets);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].country, "IN");
  EXPECT_EQ(s[0].share, 0.5);
  EXPECT_EQ(s[1].country, "GB");
  EXPECT_EQ(s[2].country, "US");
}

TEST(TopicPopularity, DominantTopicCounts) {
  const std::vector<Tokens> docs = {{"a", "b", "c"}, {"a", "b", "c"}, {"d", "e", "f"}, {"a", "d", "f"}};
  lda::LdaConfig c;
  c.num_topics = 3;
  const lda::TopicModel m(c, lda::EncodedCorpus::encode(docs), {{1, 1, 1}, {1, 1, 0}, {2, 2, 2}, {0, 1, 2}});
  const std::vector<Polarity> pol = {Polarity::kPositive, Polarity::kPositive, Polarity::kNegative,
                                     Polarity::kNegative};
  const auto [pos, neg] = topic_popularity(m, pol, 2);
  EXPECT_EQ(pos.total, 2u);
  ASSERT_EQ(pos.ranked.size(), 3u);
  EXPECT_EQ(pos.ranked[0].topic, 1u);
  EXPECT_EQ(pos.ranked[0].count, 2u);
  EXPECT_EQ(pos.ranked[0].words.size(), 2u);
  // Uniform document goes to topic 0; ranking ties stay in index order.
  EXPECT_EQ(neg.ranked[0].topic, 0u);
  EXPECT_EQ(neg.ranked[0].count, 1u);
  EXPECT_EQ(neg.ranked[1].topic, 2u);
  std::size_t sum = 0;
  for (const auto& t : neg.ranked) sum += t.count;
  EXPECT_EQ(sum, neg.total);
  EXPECT_THROW(topic_popularity(m, std::span<const Polarity>(pol).first(3)), Error);
  EXPECT_EQ(to_json(pos, 1)["topics"].size(), 1u);
}

TEST(Exports, CsvAndSvgShapes) {
  const std::vector<corpus::Tweet> tweets = {tweet("1", "IN", {Brand::kCovaxin})};
  const std::vector<Polarity> pol = {Polarity::kPositive};
  const auto r = sentiment_distribution(tweets, pol);
  const auto csv = distribution_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "country,brand,positive,neutral,negative,total,p_positive,p_neutral,p_negative");
  EXPECT_NE(csv.find("IN,Covaxin,1,0,0,1,1.000000,0.000000,0.000000"), std::string::npos);
  const auto svg = distribution_svg(r);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);

  FrequencyTable t;
  t.entries = {{"vaccine", 4}, {"dose", 1}};
  EXPECT_EQ(frequency_csv(t), "rank,term,count,weight\n1,vaccine,4,1.000000\n2,dose,1,0.250000\n");
}

}  // namespace
}  // namespace sentopic::analytics
