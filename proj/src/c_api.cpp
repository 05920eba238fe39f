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

#include "sentopic/sentopic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sentopic/error.hpp"
#include "sentopic/pipeline.hpp"
#include "sentopic/sentiment.hpp"
#include "sentopic/topicmodel.hpp"
#include "sentopic/tsv.hpp"

struct sentopic_config {
  sentopic::pipeline::RunConfig config;
};

struct sentopic_analyzer {
  sentopic::sentiment::SentimentLexicon lexicon;
};

struct sentopic_model {
  sentopic::lda::TopicModel model;
  std::vector<std::vector<std::string>> ranked;  // per topic, whole vocabulary
};

namespace {

thread_local std::string last_error;

sentopic_status status_of(sentopic::ErrorKind kind) {
  switch (kind) {
    case sentopic::ErrorKind::kUsage: return SENTOPIC_ERR_USAGE;
    case sentopic::ErrorKind::kDependency: return SENTOPIC_ERR_DEPENDENCY;
    case sentopic::ErrorKind::kData: return SENTOPIC_ERR_DATA;
    case sentopic::ErrorKind::kIo: return SENTOPIC_ERR_IO;
    case sentopic::ErrorKind::kInternal: break;
  }
  return SENTOPIC_ERR_INTERNAL;
}

sentopic_status fail(sentopic_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
sentopic_status guarded(Fn&& fn) {
  try {
    fn();
    return SENTOPIC_OK;
  } catch (const sentopic::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SENTOPIC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SENTOPIC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SENTOPIC_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sentopic_version(void) { return sentopic::pipeline::version().data(); }

const char* sentopic_last_error(void) { return last_error.c_str(); }

const char* sentopic_status_name(sentopic_status status) {
  switch (status) {
    case SENTOPIC_OK: return "ok";
    case SENTOPIC_ERR_INTERNAL: return "internal error";
    case SENTOPIC_ERR_USAGE: return "usage error";
    case SENTOPIC_ERR_DEPENDENCY: return "missing dependency";
    case SENTOPIC_ERR_DATA: return "data error";
    case SENTOPIC_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

void sentopic_string_free(char* s) { std::free(s); }

sentopic_status sentopic_config_new(sentopic_config** out) {
  if (out == nullptr) return fail(SENTOPIC_ERR_USAGE, "out is NULL");
  return guarded([&] { *out = new sentopic_config{sentopic::pipeline::RunConfig::defaults()}; });
}

sentopic_status sentopic_config_load(const char* toml_path, sentopic_config** out) {
  if (toml_path == nullptr || out == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  return guarded([&] { *out = new sentopic_config{sentopic::pipeline::RunConfig::load(toml_path)}; });
}

sentopic_status sentopic_config_set(sentopic_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) {
    return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  }
  return guarded([&] { config->config.set(key, value); });
}

sentopic_status sentopic_config_to_json(const sentopic_config* config, char** out_json) {
  if (config == nullptr || out_json == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  return guarded([&] { *out_json = copy_string(config->config.to_json().dump(2)); });
}

void sentopic_config_free(sentopic_config* config) { delete config; }

sentopic_status sentopic_run(const sentopic_config* config, const char* stage, char** summary_json) {
  if (config == nullptr || stage == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  return guarded([&] {
    const auto summary =
        sentopic::pipeline::run_stage(config->config, sentopic::pipeline::stage_from_string(stage));
    if (summary_json != nullptr) *summary_json = copy_string(summary.dump(2));
  });
}

sentopic_status sentopic_analyzer_load(const char* lexicon_tsv, const char* emoji_tsv,
                                       sentopic_analyzer** out) {
  if (out == nullptr) return fail(SENTOPIC_ERR_USAGE, "out is NULL");
  return guarded([&] {
    const auto defaults = sentopic::pipeline::RunConfig::defaults().resources.resolved();
    *out = new sentopic_analyzer{sentopic::sentiment::SentimentLexicon::load(
        lexicon_tsv != nullptr ? std::filesystem::path(lexicon_tsv) : defaults.lexicon,
        emoji_tsv != nullptr ? std::filesystem::path(emoji_tsv) : defaults.emoji)};
  });
}

sentopic_status sentopic_analyzer_score(const sentopic_analyzer* analyzer, const char* text,
                                        size_t length, sentopic_score* out) {
  if (analyzer == nullptr || out == nullptr || (text == nullptr && length != 0)) {
    return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  }
  return guarded([&] {
    const auto s = sentopic::sentiment::score(std::string_view(text == nullptr ? "" : text, length),
                                              analyzer->lexicon);
    *out = {s.pos, s.neu, s.neg, s.compound};
  });
}

void sentopic_analyzer_free(sentopic_analyzer* analyzer) { delete analyzer; }

sentopic_polarity sentopic_classify(double compound) {
  switch (sentopic::sentiment::classify(compound)) {
    case sentopic::sentiment::Polarity::kPositive: return SENTOPIC_POSITIVE;
    case sentopic::sentiment::Polarity::kNegative: return SENTOPIC_NEGATIVE;
    case sentopic::sentiment::Polarity::kNeutral: break;
  }
  return SENTOPIC_NEUTRAL;
}

sentopic_status sentopic_model_load(const char* model_json_path, sentopic_model** out) {
  if (model_json_path == nullptr || out == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(sentopic::read_file(model_json_path));
    } catch (const nlohmann::json::exception& e) {
      sentopic::throw_data(std::string(model_json_path) + ": " + e.what());
    }
    auto model = sentopic::lda::TopicModel::from_json(j);
    std::vector<std::vector<std::string>> ranked;
    for (std::size_t k = 0; k < model.num_topics(); ++k) {
      ranked.push_back(sentopic::lda::top_words(model, k, model.vocab_size()));
    }
    *out = new sentopic_model{std::move(model), std::move(ranked)};
  });
}

size_t sentopic_model_num_topics(const sentopic_model* model) {
  return model == nullptr ? 0 : model->model.num_topics();
}

size_t sentopic_model_num_docs(const sentopic_model* model) {
  return model == nullptr ? 0 : model->model.num_docs();
}

size_t sentopic_model_vocab_size(const sentopic_model* model) {
  return model == nullptr ? 0 : model->model.vocab_size();
}

sentopic_status sentopic_model_theta(const sentopic_model* model, size_t doc, double* out,
                                     size_t out_len) {
  if (model == nullptr || out == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  const auto& m = model->model;
  if (doc >= m.num_docs()) return fail(SENTOPIC_ERR_USAGE, "document index out of range");
  if (out_len < m.num_topics()) return fail(SENTOPIC_ERR_USAGE, "output buffer shorter than K");
  for (std::size_t k = 0; k < m.num_topics(); ++k) out[k] = m.theta(doc, k);
  return SENTOPIC_OK;
}

sentopic_status sentopic_model_top_word(const sentopic_model* model, size_t topic, size_t rank,
                                        const char** out) {
  if (model == nullptr || out == nullptr) return fail(SENTOPIC_ERR_USAGE, "NULL argument");
  if (topic >= model->ranked.size()) return fail(SENTOPIC_ERR_USAGE, "topic index out of range");
  if (rank >= model->ranked[topic].size()) return fail(SENTOPIC_ERR_USAGE, "rank out of range");
  *out = model->ranked[topic][rank].c_str();
  return SENTOPIC_OK;
}

void sentopic_model_free(sentopic_model* model) { delete model; }

}  // extern "C"
