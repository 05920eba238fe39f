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

#include "sentopic/topicmodel.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "sentopic/error.hpp"

namespace sentopic::lda {
namespace {

using Tokens = std::vector<std::string>;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInternal;
}

// Two disjoint 10-word vocabularies, each document drawn from one.
std::vector<Tokens> planted_corpus(std::size_t docs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tokens> out;
  for (std::size_t d = 0; d < docs; ++d) {
    const char prefix = d % 2 == 0 ? 'a' : 'b';
    Tokens doc;
    for (int n = 0; n < 12; ++n) doc.push_back(std::string(1, prefix) + std::to_string(rng() % 10));
    out.push_back(doc);
  }
  return out;
}

LdaConfig small_config(std::size_t k, std::uint64_t seed = 7) {
  LdaConfig c;
  c.num_topics = k;
  c.iterations = 60;
  c.burn_in = 10;
  c.seed = seed;
  return c;
}

TEST(LdaConfig, Validation) {
  EXPECT_NO_THROW(LdaConfig{}.validate());
  auto c = small_config(0);
  EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::kUsage);
  c = small_config(2);
  c.alpha = 0.0;
  EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::kUsage);
  c = small_config(2);
  c.eta = -1.0;
  EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::kUsage);
  c = small_config(2);
  c.burn_in = c.iterations;
  EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::kUsage);
}

TEST(Vocabulary, LexicographicIds) {
  const std::vector<Tokens> docs = {{"pear", "apple"}, {"fig", "apple"}};
  const auto v = Vocabulary::build(docs);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.token(0), "apple");
  EXPECT_EQ(v.token(2), "pear");
  EXPECT_EQ(v.find("fig"), 1u);
  EXPECT_EQ(v.find("kiwi"), std::nullopt);
}

TEST(Encode, RejectsEmptyInput) {
  EXPECT_EQ(kind_of([] { EncodedCorpus::encode(std::vector<Tokens>{}); }), ErrorKind::kUsage);
  const std::vector<Tokens> with_empty = {{"a"}, {}};
  EXPECT_EQ(kind_of([&] { EncodedCorpus::encode(with_empty); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of([&] { fit(with_empty, small_config(2)); }), ErrorKind::kUsage);
}

TEST(Fit, SingleTopicThetaIsOne) {
  const auto docs = planted_corpus(20, 1);
  const auto m = fit(docs, small_config(1));
  for (std::size_t d = 0; d < m.num_docs(); ++d) EXPECT_DOUBLE_EQ(m.theta(d, 0), 1.0);
}

TEST(Fit, InvariantsHoldAfterEverySweep) {
  const auto docs = planted_corpus(40, 2);
  std::size_t sweeps = 0;
  const auto m = fit(docs, small_config(3), [&](std::size_t s, const TopicModel& state) {
    EXPECT_EQ(s, ++sweeps);
    EXPECT_NO_THROW(state.check_invariants());
  });
  EXPECT_EQ(sweeps, 60u);
  for (std::size_t d = 0; d < m.num_docs(); ++d) {
    const auto row = m.theta_row(d);
    EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 1.0, 1e-9);
    for (std::size_t k = 0; k < m.num_topics(); ++k) {
      const double want = (m.n_dk(d, k) + m.config().alpha) /
                          (docs[d].size() + m.num_topics() * m.config().alpha);
      EXPECT_DOUBLE_EQ(m.theta(d, k), want);
    }
  }
  for (std::size_t k = 0; k < m.num_topics(); ++k) {
    const auto row = m.phi_row(k);
    EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(Fit, SeededDeterminism) {
  const auto docs = planted_corpus(30, 3);
  const auto a = fit(docs, small_config(4, 99));
  const auto b = fit(docs, small_config(4, 99));
  EXPECT_EQ(a.assignments(), b.assignments());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  const auto c = fit(docs, small_config(4, 100));
  EXPECT_NE(a.assignments(), c.assignments());
}

TEST(Fit, WarnsWhenTopicsExceedTokens) {
  const std::vector<Tokens> docs = {{"a", "b"}};
  const auto m = fit(docs, small_config(5));
  EXPECT_FALSE(m.warnings().empty());
  EXPECT_NO_THROW(m.check_invariants());
}

TEST(Fit, LikelihoodImprovesOverInitialState) {
  const auto docs = planted_corpus(60, 4);
  const auto config = small_config(2, 5);
  const GibbsSampler init(EncodedCorpus::encode(docs), config);
  const auto fitted = fit(docs, config);
  EXPECT_GE(fitted.log_likelihood(), init.state().log_likelihood());
}

TEST(Conditional, NormalizesToPositiveFinite) {
  const auto docs = planted_corpus(10, 6);
  GibbsSampler s(EncodedCorpus::encode(docs), small_config(3));
  s.sweep();
  std::vector<double> w(3);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (std::size_t n = 0; n < docs[d].size(); ++n) {
      s.conditional(d, n, w);
      const double sum = w[0] + w[1] + w[2];
      EXPECT_GT(sum, 0.0);
      EXPECT_TRUE(std::isfinite(sum));
    }
  }
}

TEST(Json, RoundTripReproducesEstimates) {
  const auto docs = planted_corpus(20, 7);
  const auto m = fit(docs, small_config(3));
  const auto j = m.to_json();
  EXPECT_EQ(j["format"], "sentopic.lda");
  const auto r = TopicModel::from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(r.num_docs(), m.num_docs());
  for (std::size_t d = 0; d < m.num_docs(); ++d) EXPECT_EQ(r.theta_row(d), m.theta_row(d));
  for (std::size_t k = 0; k < m.num_topics(); ++k) EXPECT_EQ(r.phi_row(k), m.phi_row(k));
  EXPECT_EQ(r.config().seed, m.config().seed);
}

TEST(Json, RejectsMalformedModels) {
  const auto docs = planted_corpus(6, 8);
  auto j = fit(docs, small_config(2)).to_json();
  auto bad_version = j;
  bad_version["version"] = 99;
  EXPECT_EQ(kind_of([&] { TopicModel::from_json(bad_version); }), ErrorKind::kData);
  auto bad_z = j;
  bad_z["assignments"][0][0] = 7;
  EXPECT_EQ(kind_of([&] { TopicModel::from_json(bad_z); }), ErrorKind::kData);
  EXPECT_EQ(kind_of([] { TopicModel::from_json(nlohmann::json::object()); }), ErrorKind::kData);
}

TEST(TopWords, ClampTiesAndRange) {
  // One topic, every word once: a uniform phi row.
  const std::vector<Tokens> docs = {{"delta", "alpha", "charlie", "bravo"}};
  const auto m = fit(docs, small_config(1));
  EXPECT_EQ(top_words(m, 0, 2), (Tokens{"alpha", "bravo"}));
  EXPECT_EQ(top_words(m, 0, 10), (Tokens{"alpha", "bravo", "charlie", "delta"}));
  EXPECT_EQ(kind_of([&] { top_words(m, 1, 2); }), ErrorKind::kUsage);
  EXPECT_EQ(kind_of([&] { top_words(m, 0, 0); }), ErrorKind::kUsage);
}

TEST(TopWords, OrderedByCount) {
  const std::vector<Tokens> docs = {{"b", "b", "b", "a", "c", "c"}};
  const auto m = fit(docs, small_config(1));
  EXPECT_EQ(top_words(m, 0, 3), (Tokens{"b", "c", "a"}));
}

TEST(DominantTopic, ArgmaxWithSmallestTie) {
  const std::vector<Tokens> docs = {{"a", "b"}, {"c", "d", "e"}};
  LdaConfig c = small_config(3);
  TopicModel m(c, EncodedCorpus::encode(docs), {{1, 1}, {0, 2, 1}});
  EXPECT_EQ(m.dominant_topic(0), 1u);
  EXPECT_EQ(m.dominant_topic(1), 0u);
}

TEST(TopicModel, RejectsMisshapenAssignments) {
  const std::vector<Tokens> docs = {{"a", "b"}};
  EXPECT_EQ(kind_of([&] { TopicModel(small_config(2), EncodedCorpus::encode(docs), {{0}}); }),
            ErrorKind::kData);
  EXPECT_EQ(kind_of([&] { TopicModel(small_config(2), EncodedCorpus::encode(docs), {{0, 2}}); }),
            ErrorKind::kData);
}

TEST(Coherence, HandExamples) {
  const std::vector<Tokens> two = {{"a", "b"}, {"a", "b"}};
  const CooccurrenceIndex idx(two);
  const Tokens ab = {"a", "b"};
  EXPECT_NEAR(umass_coherence(ab, idx), std::log(1.5), 1e-12);

  // D(x)=5, D(y)=1, never together: the single pair scores log(1/5).
  std::vector<Tokens> apart(5, Tokens{"x"});
  apart.push_back({"y"});
  const CooccurrenceIndex idx2(apart);
  const Tokens xy = {"y", "x"};
  EXPECT_NEAR(umass_coherence(xy, idx2), std::log(1.0 / 5.0), 1e-12);

  const Tokens single = {"a"};
  EXPECT_EQ(umass_coherence(single, idx), 0.0);
  const Tokens missing = {"a", "zzz"};
  EXPECT_EQ(kind_of([&] { umass_coherence(missing, idx); }), ErrorKind::kInternal);
}

TEST(Coherence, ModelAverageMatchesHandValue) {
  const std::vector<Tokens> two = {{"a", "b"}, {"a", "b"}};
  const auto m = fit(two, small_config(1));
  EXPECT_NEAR(coherence(m, two, 2), std::log(1.5), 1e-12);
  EXPECT_EQ(coherence(m, two, 1), 0.0);
}

TEST(Coherence, PairTermsBoundedBySmoothing) {
  const auto docs = planted_corpus(30, 9);
  const CooccurrenceIndex idx(docs);
  const Tokens words = {"a1", "a2", "a3", "b4"};
  double bound = 0.0;
  std::vector<std::pair<std::size_t, std::string>> byfreq;
  for (const auto& w : words) byfreq.emplace_back(idx.doc_freq(w), w);
  std::sort(byfreq.begin(), byfreq.end(), [](auto& x, auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  for (std::size_t j = 1; j < byfreq.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      bound += std::log((byfreq[i].first + 1.0) / byfreq[i].first);
  EXPECT_LE(umass_coherence(words, idx), bound + 1e-12);
}

TEST(SweepK, SingletonRange) {
  const auto docs = planted_corpus(20, 10);
  const auto r = sweep_k(docs, small_config(2), {5, 5, 10, 1, 0});
  EXPECT_EQ(r.per_k.size(), 1u);
  EXPECT_EQ(r.best_k, 5u);
}

TEST(SweepK, EmptyRangeIsUsageError) {
  const auto docs = planted_corpus(20, 10);
  EXPECT_EQ(kind_of([&] { sweep_k(docs, small_config(2), {4, 3, 10, 1, 0}); }), ErrorKind::kUsage);
}

TEST(SweepK, SeedPolicyAndThreadIndependence) {
  const auto docs = planted_corpus(40, 11);
  const auto base = small_config(2, 100);
  const auto serial = sweep_k(docs, base, {1, 4, 5, 1, 0});
  const auto parallel = sweep_k(docs, base, {1, 4, 5, 4, 0});
  EXPECT_EQ(serial.per_k, parallel.per_k);
  EXPECT_EQ(serial.best_k, parallel.best_k);
  auto c3 = base;
  c3.num_topics = 3;
  c3.seed = base.seed + 3;
  EXPECT_EQ(serial.per_k.at(3), coherence(fit(docs, c3), docs, 5));
  ASSERT_TRUE(serial.best_k);
  for (const auto& [k, v] : serial.per_k) EXPECT_LE(v, serial.per_k.at(*serial.best_k));
}

TEST(SweepK, HoldoutUsesReferenceSplit) {
  const auto docs = planted_corpus(40, 12);
  const auto r = sweep_k(docs, small_config(2), {2, 3, 5, 1, 4});
  EXPECT_EQ(r.per_k.size() + r.failed.size(), 2u);
  const auto j = to_json(r);
  EXPECT_EQ(j["top_n"], 5);
  EXPECT_TRUE(j.contains("best_k"));
}

}  // namespace
}  // namespace sentopic::lda
