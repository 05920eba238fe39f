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

// Throughput harness: sentiment tweets/s and Gibbs token-updates/s.
// Prints figures and the soft targets; never fails on a slow machine.
//
//   sentopic_bench [--tweets N] [--threads N] [--docs N] [--sweeps N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sentopic/parallel.hpp"
#include "sentopic/sentiment.hpp"
#include "sentopic/topicmodel.hpp"

namespace {

constexpr double kSentimentTarget = 50'000.0;  // tweets per second
constexpr double kGibbsTarget = 1'000'000.0;   // token updates per second

constexpr std::string_view kTemplates[] = {
    "Got my first dose of the Pfizer vaccine today, feeling great and so grateful!",
    "The side effects were NOT fun... fever and a sore arm all night :(",
    "Why is the Covaxin rollout so slow?? Really frustrating for everyone here",
    "Moderna booster done. Slight headache but otherwise fine. Thank you nurses 😊",
    "honestly not sure whether sputnik v is safe, anyone have info?",
    "Very happy with how smooth the vaccination centre was, well organised",
    "Terrible queue, waited 4 hours and they ran out of AstraZeneca doses",
    "Sinovac approved for over 60s, good news for my parents",
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t arg_value(int argc, char** argv, std::string_view name, std::size_t fallback) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (name == argv[i]) return static_cast<std::size_t>(std::strtoull(argv[i + 1], nullptr, 10));
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n_tweets = arg_value(argc, argv, "--tweets", 200'000);
  const unsigned threads = static_cast<unsigned>(arg_value(argc, argv, "--threads", 4));
  const std::size_t n_docs = arg_value(argc, argv, "--docs", 5'000);
  const std::size_t sweeps = arg_value(argc, argv, "--sweeps", 20);

  const std::string res = SENTOPIC_RESOURCE_DIR;
  const auto lex = sentopic::sentiment::SentimentLexicon::load(res + "/vader_lexicon.tsv",
                                                               res + "/emoji_map.tsv");
  std::vector<double> compounds(n_tweets);
  auto t0 = std::chrono::steady_clock::now();
  sentopic::parallel_for(n_tweets, threads, [&](std::size_t i) {
    compounds[i] = sentopic::sentiment::score(kTemplates[i % std::size(kTemplates)], lex).compound;
  });
  const double sentiment_rate = static_cast<double>(n_tweets) / seconds_since(t0);

  // Synthetic corpus: 20 topics over a 2,000-word vocabulary, 15 tokens per doc.
  std::mt19937_64 rng(7);
  std::vector<std::vector<std::string>> docs(n_docs);
  for (auto& d : docs) {
    const std::size_t topic = rng() % 20;
    for (int n = 0; n < 15; ++n) d.push_back("w" + std::to_string(topic * 100 + rng() % 100));
  }
  sentopic::lda::LdaConfig cfg;
  cfg.num_topics = 20;
  cfg.iterations = sweeps;
  cfg.burn_in = 0;
  const auto corpus = sentopic::lda::EncodedCorpus::encode(docs);
  t0 = std::chrono::steady_clock::now();
  const auto model = sentopic::lda::fit(corpus, cfg);
  const double gibbs_rate = static_cast<double>(corpus.total_tokens() * sweeps) / seconds_since(t0);

  std::printf("sentiment: %.0f tweets/s on %u threads (target %.0f) %s\n", sentiment_rate, threads,
              kSentimentTarget, sentiment_rate >= kSentimentTarget ? "met" : "below target");
  std::printf("gibbs: %.0f token-updates/s, K=%zu, %zu tokens (target %.0f) %s\n", gibbs_rate,
              model.num_topics(), corpus.total_tokens(), kGibbsTarget,
              gibbs_rate >= kGibbsTarget ? "met" : "below target");
  return 0;
}
