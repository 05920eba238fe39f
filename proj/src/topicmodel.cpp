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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "sentopic/error.hpp"
#include "sentopic/parallel.hpp"

namespace sentopic::lda {

namespace {

constexpr std::string_view kModelFormat = "sentopic.lda";
constexpr int kModelVersion = 1;

[[noreturn]] void internal_error(const std::string& what) {
  throw Error(ErrorKind::kInternal, what);
}

}  // namespace

void LdaConfig::validate() const {
  if (num_topics < 1) throw_usage("number of topics must be >= 1");
  if (!(alpha > 0.0)) throw_usage("alpha must be > 0");
  if (!(eta > 0.0)) throw_usage("eta must be > 0");
  if (burn_in >= iterations) throw_usage("burn_in must be < iterations");
}

Vocabulary::Vocabulary(std::vector<std::string> sorted_unique_tokens)
    : tokens_(std::move(sorted_unique_tokens)) {
  ids_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i > 0 && !(tokens_[i - 1] < tokens_[i])) {
      throw_data("vocabulary must be sorted and unique");
    }
    ids_.emplace(tokens_[i], static_cast<std::uint32_t>(i));
  }
}

Vocabulary Vocabulary::build(std::span<const std::vector<std::string>> docs) {
  std::set<std::string> unique;
  for (const auto& doc : docs) unique.insert(doc.begin(), doc.end());
  return Vocabulary(std::vector<std::string>(unique.begin(), unique.end()));
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

EncodedCorpus EncodedCorpus::encode(std::span<const std::vector<std::string>> docs,
                                    std::vector<std::string> doc_ids) {
  if (docs.empty()) throw_usage("cannot fit a topic model to an empty corpus");
  if (!doc_ids.empty() && doc_ids.size() != docs.size()) {
    throw_usage("document id count does not match document count");
  }
  EncodedCorpus out;
  out.vocab = Vocabulary::build(docs);
  out.docs.reserve(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (docs[d].empty()) throw_usage("document " + std::to_string(d) + " is empty");
    std::vector<std::uint32_t> ids;
    ids.reserve(docs[d].size());
    for (const auto& token : docs[d]) ids.push_back(*out.vocab.find(token));
    out.docs.push_back(std::move(ids));
  }
  out.doc_ids = std::move(doc_ids);
  return out;
}

std::size_t EncodedCorpus::total_tokens() const {
  std::size_t n = 0;
  for (const auto& d : docs) n += d.size();
  return n;
}

TopicModel::TopicModel(LdaConfig config, EncodedCorpus corpus,
                       std::vector<std::vector<std::uint32_t>> assignments)
    : config_(config), corpus_(std::move(corpus)), z_(std::move(assignments)) {
  config_.validate();
  const std::size_t K = config_.num_topics;
  const std::size_t V = corpus_.vocab.size();
  if (z_.size() != corpus_.docs.size()) throw_data("assignment/document count mismatch");
  n_dk_.assign(corpus_.docs.size() * K, 0);
  n_wk_.assign(V * K, 0);
  n_k_.assign(K, 0);
  for (std::size_t d = 0; d < corpus_.docs.size(); ++d) {
    const auto& doc = corpus_.docs[d];
    if (z_[d].size() != doc.size()) {
      throw_data("assignment length mismatch in document " + std::to_string(d));
    }
    for (std::size_t n = 0; n < doc.size(); ++n) {
      const std::uint32_t k = z_[d][n];
      const std::uint32_t w = doc[n];
      if (k >= K) throw_data("topic assignment out of range");
      if (w >= V) throw_data("word id out of range");
      ++n_dk_[d * K + k];
      ++n_wk_[w * K + k];
      ++n_k_[k];
    }
  }
}

double TopicModel::theta(std::size_t d, std::size_t k) const {
  const double K = static_cast<double>(num_topics());
  return (n_dk(d, k) + config_.alpha) /
         (static_cast<double>(corpus_.docs[d].size()) + K * config_.alpha);
}

double TopicModel::phi(std::size_t k, std::size_t w) const {
  const double V = static_cast<double>(vocab_size());
  return (n_kw(k, w) + config_.eta) / (n_k(k) + V * config_.eta);
}

std::vector<double> TopicModel::theta_row(std::size_t d) const {
  std::vector<double> row(num_topics());
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = theta(d, k);
  return row;
}

std::vector<double> TopicModel::phi_row(std::size_t k) const {
  std::vector<double> row(vocab_size());
  for (std::size_t w = 0; w < row.size(); ++w) row[w] = phi(k, w);
  return row;
}

std::size_t TopicModel::dominant_topic(std::size_t d) const {
  // theta is monotone in n_dk within a document.
  std::size_t best = 0;
  for (std::size_t k = 1; k < num_topics(); ++k) {
    if (n_dk(d, k) > n_dk(d, best)) best = k;
  }
  return best;
}

double TopicModel::log_likelihood() const {
  const std::size_t K = num_topics();
  double total = 0.0;
  std::vector<double> th(K);
  for (std::size_t d = 0; d < num_docs(); ++d) {
    for (std::size_t k = 0; k < K; ++k) th[k] = theta(d, k);
    for (const auto w : corpus_.docs[d]) {
      double p = 0.0;
      for (std::size_t k = 0; k < K; ++k) p += th[k] * phi(k, w);
      total += std::log(p);
    }
  }
  return total;
}

void TopicModel::check_invariants() const {
  const std::size_t K = num_topics();
  const std::size_t V = vocab_size();
  std::size_t doc_total = 0;
  for (std::size_t d = 0; d < num_docs(); ++d) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < K; ++k) row += n_dk(d, k);
    if (row != corpus_.docs[d].size()) {
      internal_error("doc-topic counts of document " + std::to_string(d) + " do not sum to its length");
    }
    doc_total += row;
  }
  std::size_t topic_total = 0;
  for (std::size_t k = 0; k < K; ++k) {
    std::size_t col = 0;
    for (std::size_t w = 0; w < V; ++w) col += n_kw(k, w);
    if (col != n_k(k)) internal_error("topic-word counts of topic " + std::to_string(k) + " disagree with n_k");
    topic_total += n_k(k);
  }
  const std::size_t tokens = corpus_.total_tokens();
  if (doc_total != tokens || topic_total != tokens) internal_error("count totals disagree with token count");
}

nlohmann::json TopicModel::to_json() const {
  nlohmann::json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  j["config"] = {{"num_topics", config_.num_topics}, {"alpha", config_.alpha},
                 {"eta", config_.eta},               {"iterations", config_.iterations},
                 {"burn_in", config_.burn_in},       {"seed", config_.seed}};
  j["vocab"] = corpus_.vocab.tokens();
  j["doc_ids"] = corpus_.doc_ids;
  j["docs"] = corpus_.docs;
  j["assignments"] = z_;
  return j;
}

TopicModel TopicModel::from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kModelFormat) throw_data("not a topic model file");
    if (j.at("version").get<int>() != kModelVersion) throw_data("unsupported topic model version");
    const auto& c = j.at("config");
    LdaConfig config;
    config.num_topics = c.at("num_topics").get<std::size_t>();
    config.alpha = c.at("alpha").get<double>();
    config.eta = c.at("eta").get<double>();
    config.iterations = c.at("iterations").get<std::size_t>();
    config.burn_in = c.at("burn_in").get<std::size_t>();
    config.seed = c.at("seed").get<std::uint64_t>();
    EncodedCorpus corpus;
    corpus.vocab = Vocabulary(j.at("vocab").get<std::vector<std::string>>());
    corpus.docs = j.at("docs").get<std::vector<std::vector<std::uint32_t>>>();
    corpus.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    if (!corpus.doc_ids.empty() && corpus.doc_ids.size() != corpus.docs.size()) {
      throw_data("doc_ids length mismatch");
    }
    auto z = j.at("assignments").get<std::vector<std::vector<std::uint32_t>>>();
    return TopicModel(config, std::move(corpus), std::move(z));
  } catch (const nlohmann::json::exception& e) {
    throw_data(std::string("malformed topic model: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kUsage) throw_data(std::string("bad topic model config: ") + e.what());
    throw;
  }
}

GibbsSampler::GibbsSampler(EncodedCorpus corpus, const LdaConfig& config)
    : model_(config, EncodedCorpus{}, {}), rng_(config.seed) {
  const std::size_t K = config.num_topics;
  std::vector<std::vector<std::uint32_t>> z(corpus.docs.size());
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    z[d].resize(corpus.docs[d].size());
    for (auto& k : z[d]) {
      k = static_cast<std::uint32_t>(std::min<double>(uniform() * static_cast<double>(K),
                                                      static_cast<double>(K - 1)));
    }
  }
  model_ = TopicModel(config, std::move(corpus), std::move(z));
  weights_.resize(K);
}

double GibbsSampler::uniform() {
  // 53 random mantissa bits; independent of the standard library's
  // distribution implementations.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

void GibbsSampler::conditional(std::size_t d, std::size_t n, std::span<double> out) const {
  const auto& m = model_;
  const std::size_t K = m.num_topics();
  const double alpha = m.config_.alpha;
  const double eta = m.config_.eta;
  const double v_eta = static_cast<double>(m.vocab_size()) * eta;
  const std::uint32_t w = m.corpus_.docs[d][n];
  const std::uint32_t current = m.z_[d][n];
  const std::uint32_t* ndk = &m.n_dk_[d * K];
  const std::uint32_t* nwk = &m.n_wk_[static_cast<std::size_t>(w) * K];
  for (std::size_t k = 0; k < K; ++k) {
    const double self = k == current ? 1.0 : 0.0;
    out[k] = (ndk[k] - self + alpha) * (nwk[k] - self + eta) / (m.n_k_[k] - self + v_eta);
  }
}

void GibbsSampler::sweep() {
  auto& m = model_;
  const std::size_t K = m.num_topics();
  const double alpha = m.config_.alpha;
  const double eta = m.config_.eta;
  const double v_eta = static_cast<double>(m.vocab_size()) * eta;
  for (std::size_t d = 0; d < m.corpus_.docs.size(); ++d) {
    const auto& doc = m.corpus_.docs[d];
    std::uint32_t* ndk = &m.n_dk_[d * K];
    for (std::size_t n = 0; n < doc.size(); ++n) {
      const std::uint32_t w = doc[n];
      std::uint32_t* nwk = &m.n_wk_[static_cast<std::size_t>(w) * K];
      const std::uint32_t old = m.z_[d][n];
      --ndk[old];
      --nwk[old];
      --m.n_k_[old];

      double total = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        total += (ndk[k] + alpha) * (nwk[k] + eta) / (m.n_k_[k] + v_eta);
        weights_[k] = total;
      }
      const double u = uniform() * total;
      std::size_t k = 0;
      while (k + 1 < K && weights_[k] <= u) ++k;

      m.z_[d][n] = static_cast<std::uint32_t>(k);
      ++ndk[k];
      ++nwk[k];
      ++m.n_k_[k];
    }
  }
}

TopicModel fit(const EncodedCorpus& corpus, const LdaConfig& config, const SweepObserver& observer) {
  config.validate();
  if (corpus.docs.empty()) throw_usage("cannot fit a topic model to an empty corpus");
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    if (corpus.docs[d].empty()) throw_usage("document " + std::to_string(d) + " is empty");
  }
  const std::size_t tokens = corpus.total_tokens();
  GibbsSampler sampler(corpus, config);
  for (std::size_t s = 1; s <= config.iterations; ++s) {
    sampler.sweep();
    if (observer) observer(s, sampler.state());
  }
  TopicModel model = std::move(sampler).release();
  if (config.num_topics > tokens) {
    model.add_warning("K=" + std::to_string(config.num_topics) + " exceeds the corpus token count " +
                      std::to_string(tokens));
  }
  return model;
}

TopicModel fit(std::span<const std::vector<std::string>> docs, const LdaConfig& config,
               const SweepObserver& observer) {
  return fit(EncodedCorpus::encode(docs), config, observer);
}

std::vector<std::string> top_words(const TopicModel& model, std::size_t k, std::size_t n) {
  if (k >= model.num_topics()) {
    throw_usage("topic index " + std::to_string(k) + " out of range [0, " +
                std::to_string(model.num_topics()) + ")");
  }
  if (n == 0) throw_usage("top word count must be >= 1");
  std::vector<std::uint32_t> ids(model.vocab_size());
  std::iota(ids.begin(), ids.end(), 0u);
  const std::size_t take = std::min(n, ids.size());
  // Vocabulary ids are in lexicographic order, so the id breaks ties.
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      const auto ca = model.n_kw(k, a);
                      const auto cb = model.n_kw(k, b);
                      return ca != cb ? ca > cb : a < b;
                    });
  std::vector<std::string> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(model.vocab().token(ids[i]));
  return out;
}

CooccurrenceIndex::CooccurrenceIndex(std::span<const std::vector<std::string>> docs) {
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& w : docs[d]) {
      auto& list = postings_[w];
      if (list.empty() || list.back() != d) list.push_back(static_cast<std::uint32_t>(d));
    }
  }
}

std::size_t CooccurrenceIndex::doc_freq(const std::string& w) const {
  const auto it = postings_.find(w);
  return it == postings_.end() ? 0 : it->second.size();
}

std::size_t CooccurrenceIndex::co_doc_freq(const std::string& a, const std::string& b) const {
  const auto ia = postings_.find(a);
  const auto ib = postings_.find(b);
  if (ia == postings_.end() || ib == postings_.end()) return 0;
  const auto& x = ia->second;
  const auto& y = ib->second;
  std::size_t i = 0, j = 0, n = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double umass_coherence(std::span<const std::string> words, const CooccurrenceIndex& index) {
  std::vector<std::pair<std::size_t, std::string>> ranked;
  ranked.reserve(words.size());
  for (const auto& w : words) {
    const std::size_t df = index.doc_freq(w);
    if (df == 0) internal_error("coherence word '" + w + "' never occurs in the reference corpus");
    ranked.emplace_back(df, w);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  double score = 0.0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    for (std::size_t j = i + 1; j < ranked.size(); ++j) {
      const double co = static_cast<double>(index.co_doc_freq(ranked[i].second, ranked[j].second));
      score += std::log((co + 1.0) / static_cast<double>(ranked[i].first));
    }
  }
  return score;
}

double coherence(const TopicModel& model, std::span<const std::vector<std::string>> docs,
                 std::size_t top_n) {
  const CooccurrenceIndex index(docs);
  double total = 0.0;
  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    const auto words = top_words(model, k, top_n);
    total += umass_coherence(words, index);
  }
  return total / static_cast<double>(model.num_topics());
}

CoherenceResult sweep_k(std::span<const std::vector<std::string>> docs, const LdaConfig& base,
                        const SweepOptions& options) {
  if (options.k_min < 1 || options.k_max < options.k_min) {
    throw_usage("empty topic-count range " + std::to_string(options.k_min) + ".." +
                std::to_string(options.k_max));
  }
  std::vector<std::vector<std::string>> train;
  std::vector<std::vector<std::string>> reference;
  if (options.holdout_every > 0) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      (d % options.holdout_every == 0 ? reference : train).push_back(docs[d]);
    }
  } else {
    train.assign(docs.begin(), docs.end());
  }
  const EncodedCorpus corpus = EncodedCorpus::encode(train);
  const auto& coherence_docs = options.holdout_every > 0 ? reference : train;
  const CooccurrenceIndex index(coherence_docs);

  const std::size_t count = options.k_max - options.k_min + 1;
  std::vector<std::optional<double>> scores(count);
  std::vector<std::string> errors(count);
  parallel_for(count, options.threads, [&](std::size_t i) {
    LdaConfig cfg = base;
    cfg.num_topics = options.k_min + i;
    cfg.seed = base.seed + cfg.num_topics;
    try {
      const TopicModel model = fit(corpus, cfg);
      double total = 0.0;
      for (std::size_t k = 0; k < model.num_topics(); ++k) {
        auto words = top_words(model, k, options.top_n);
        if (options.holdout_every > 0) {
          // Held-out documents need not contain every training word.
          std::erase_if(words, [&](const std::string& w) { return index.doc_freq(w) == 0; });
        }
        total += umass_coherence(words, index);
      }
      scores[i] = total / static_cast<double>(model.num_topics());
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  CoherenceResult result;
  result.top_n = options.top_n;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = options.k_min + i;
    if (!scores[i]) {
      result.failed[k] = errors[i];
      continue;
    }
    result.per_k[k] = *scores[i];
    if (!result.best_k || *scores[i] > result.per_k[*result.best_k]) result.best_k = k;
  }
  return result;
}

nlohmann::json to_json(const CoherenceResult& r) {
  nlohmann::json per_k = nlohmann::json::array();
  for (const auto& [k, score] : r.per_k) per_k.push_back({{"k", k}, {"coherence", score}});
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& [k, msg] : r.failed) failed.push_back({{"k", k}, {"error", msg}});
  nlohmann::json j;
  j["top_n"] = r.top_n;
  j["per_k"] = std::move(per_k);
  j["failed"] = std::move(failed);
  j["best_k"] = r.best_k ? nlohmann::json(*r.best_k) : nlohmann::json(nullptr);
  return j;
}

}  // namespace sentopic::lda
