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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

// Latent Dirichlet allocation fitted by collapsed Gibbs sampling, UMass
// coherence, and coherence-driven selection of the topic count.
namespace sentopic::lda {

struct LdaConfig {
  std::size_t num_topics = 11;
  double alpha = 0.01;  // symmetric document-topic prior
  double eta = 0.1;     // symmetric topic-word prior
  std::size_t iterations = 1000;
  std::size_t burn_in = 200;
  std::uint64_t seed = 42;

  // Throws Error(kUsage) unless num_topics >= 1, alpha > 0, eta > 0 and
  // burn_in < iterations.
  void validate() const;
};

// Token <-> dense id map; ids follow lexicographic token order.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> sorted_unique_tokens);

  static Vocabulary build(std::span<const std::vector<std::string>> docs);

  std::optional<std::uint32_t> find(std::string_view token) const;
  const std::string& token(std::uint32_t id) const { return tokens_[id]; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct EncodedCorpus {
  Vocabulary vocab;
  std::vector<std::vector<std::uint32_t>> docs;
  std::vector<std::string> doc_ids;  // optional, parallel to docs

  // Throws Error(kUsage) for an empty corpus or an empty document.
  static EncodedCorpus encode(std::span<const std::vector<std::string>> docs,
                              std::vector<std::string> doc_ids = {});
  std::size_t total_tokens() const;
};

// Fitted state: assignments plus the count matrices derived from them.
// theta(d, k) = (n_dk + alpha) / (len(d) + K alpha)
// phi(k, w)   = (n_kw + eta) / (n_k + V eta)
class TopicModel {
 public:
  // Rebuilds every count from the assignments. Throws Error(kData) when
  // shapes disagree or an assignment is out of range.
  TopicModel(LdaConfig config, EncodedCorpus corpus,
             std::vector<std::vector<std::uint32_t>> assignments);

  const LdaConfig& config() const { return config_; }
  const Vocabulary& vocab() const { return corpus_.vocab; }
  const EncodedCorpus& corpus() const { return corpus_; }
  const std::vector<std::vector<std::uint32_t>>& assignments() const { return z_; }

  std::size_t num_topics() const { return config_.num_topics; }
  std::size_t num_docs() const { return corpus_.docs.size(); }
  std::size_t vocab_size() const { return corpus_.vocab.size(); }

  std::uint32_t n_dk(std::size_t d, std::size_t k) const { return n_dk_[d * num_topics() + k]; }
  std::uint32_t n_kw(std::size_t k, std::size_t w) const { return n_wk_[w * num_topics() + k]; }
  std::uint32_t n_k(std::size_t k) const { return n_k_[k]; }

  double theta(std::size_t d, std::size_t k) const;
  double phi(std::size_t k, std::size_t w) const;
  std::vector<double> theta_row(std::size_t d) const;
  std::vector<double> phi_row(std::size_t k) const;

  // argmax_k theta(d, k), ties to the smallest k.
  std::size_t dominant_topic(std::size_t d) const;

  // Sum over all tokens of log sum_k theta(d,k) phi(k,w).
  double log_likelihood() const;

  // Throws Error(kInternal) if any count identity fails.
  void check_invariants() const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  nlohmann::json to_json() const;
  // Throws Error(kData) on a malformed or wrong-version document.
  static TopicModel from_json(const nlohmann::json& j);

 private:
  friend class GibbsSampler;

  LdaConfig config_;
  EncodedCorpus corpus_;
  std::vector<std::vector<std::uint32_t>> z_;
  std::vector<std::uint32_t> n_dk_;  // D x K
  std::vector<std::uint32_t> n_wk_;  // V x K, word-major for the sampler
  std::vector<std::uint32_t> n_k_;
  std::vector<std::string> warnings_;
};

// One collapsed Gibbs chain. The constructor draws the initial assignments
// uniformly at random from the seeded generator.
class GibbsSampler {
 public:
  GibbsSampler(EncodedCorpus corpus, const LdaConfig& config);

  // Resamples every assignment once, documents and positions in order.
  void sweep();

  // Unnormalized conditional weights for position (d, n) with that token's
  // own assignment removed from the counts. `out` must hold K entries.
  void conditional(std::size_t d, std::size_t n, std::span<double> out) const;

  const TopicModel& state() const { return model_; }
  TopicModel release() && { return std::move(model_); }

 private:
  double uniform();

  TopicModel model_;
  std::mt19937_64 rng_;
  std::vector<double> weights_;
};

// Called after every sweep with the 1-based sweep number.
using SweepObserver = std::function<void(std::size_t sweep, const TopicModel&)>;

TopicModel fit(const EncodedCorpus& corpus, const LdaConfig& config,
               const SweepObserver& observer = {});
TopicModel fit(std::span<const std::vector<std::string>> docs, const LdaConfig& config,
               const SweepObserver& observer = {});

// The n words with the largest phi(k, .), descending, ties lexicographic.
// Throws Error(kUsage) if k is out of range or n == 0.
std::vector<std::string> top_words(const TopicModel& model, std::size_t k, std::size_t n);

// Document and co-document frequencies over a reference corpus.
class CooccurrenceIndex {
 public:
  explicit CooccurrenceIndex(std::span<const std::vector<std::string>> docs);

  std::size_t doc_freq(const std::string& w) const;
  std::size_t co_doc_freq(const std::string& a, const std::string& b) const;

 private:
  std::unordered_map<std::string, std::vector<std::uint32_t>> postings_;
};

// UMass coherence of one ordered word list: words are sorted by descending
// document frequency (ties lexicographic) and the score is
//   sum_{i<j} log((D(w_i, w_j) + 1) / D(w_i)).
// Throws Error(kInternal) if a word never occurs in the reference corpus.
double umass_coherence(std::span<const std::string> words, const CooccurrenceIndex& index);

// Mean UMass coherence over all topics' top-n words.
double coherence(const TopicModel& model, std::span<const std::vector<std::string>> docs,
                 std::size_t top_n = 10);

struct SweepOptions {
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  std::size_t top_n = 10;
  unsigned threads = 1;
  // When > 0, every document whose index is a multiple of this value is
  // held out of training and used as the coherence reference corpus.
  std::size_t holdout_every = 0;
};

struct CoherenceResult {
  std::map<std::size_t, double> per_k;
  std::map<std::size_t, std::string> failed;  // K -> error message
  std::optional<std::size_t> best_k;          // argmax, ties to smallest K
  std::size_t top_n = 10;
};

// Fits one chain per K in [k_min, k_max] with seed base_seed + K. A K whose
// fit fails is recorded in `failed` and left out of `per_k`. Throws
// Error(kUsage) for an empty range.
CoherenceResult sweep_k(std::span<const std::vector<std::string>> docs, const LdaConfig& base,
                        const SweepOptions& options);

nlohmann::json to_json(const CoherenceResult& r);

}  // namespace sentopic::lda
