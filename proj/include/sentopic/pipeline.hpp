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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sentopic/corpus.hpp"
#include "sentopic/preprocess.hpp"
#include "sentopic/sentiment.hpp"
#include "sentopic/topicmodel.hpp"

// Staged pipeline driven by a TOML run configuration. Each stage reads the
// snapshot files of earlier stages from the output directory and writes its
// own, plus a manifest recording input hashes, configuration and seed.
//
//   ingest      -> tweets.jsonl
//   preprocess  -> documents.jsonl, phrases.tsv
//   sentiment   -> sentiment.csv
//   topics      -> model.json (and coherence.json when the sweep is enabled)
//   sweep-k     -> coherence.json
//   report      -> report/
namespace sentopic::pipeline {

std::string_view version();

enum class Stage { kIngest, kPreprocess, kSentiment, kTopics, kSweepK, kReport };

std::string_view to_string(Stage s);
// Throws Error(kUsage) for an unknown name.
Stage stage_from_string(std::string_view name);

struct ResourcePaths {
  std::filesystem::path dir;  // fallback directory for unset entries
  std::filesystem::path lexicon;
  std::filesystem::path emoji;
  std::filesystem::path stopwords;
  std::filesystem::path meaningless;
  std::filesystem::path lemmas;
  std::filesystem::path words;
  std::filesystem::path gazetteer;
  std::filesystem::path brands;

  // Fills every empty entry from `dir` and its bundled file name.
  ResourcePaths resolved() const;
};

struct ReportOptions {
  std::size_t top_terms = 10;
  std::size_t top_countries = 5;  // per-country frequency tables
  std::size_t emotional_top = 30;
  std::size_t topic_limit = 5;
  std::size_t topic_words = 10;
  bool svg = true;
};

struct RunConfig {
  std::filesystem::path input;
  corpus::ColumnMap columns;
  bool require_country = true;
  ResourcePaths resources;
  preprocess::PreprocessOptions preprocess;
  bool require_dictionary_word = false;
  lda::LdaConfig lda;
  lda::SweepOptions sweep{1, 20, 10, 1, 0};
  bool sweep_in_topics = false;  // topics also writes coherence.json
  ReportOptions report;
  std::filesystem::path output_dir = "out";
  unsigned threads = 1;

  // Defaults with the compiled-in resource directory.
  static RunConfig defaults();

  // Reads a TOML file; relative paths resolve against its directory.
  // Throws Error(kIo) if unreadable and Error(kUsage) for bad keys or values.
  static RunConfig load(const std::filesystem::path& toml_file);

  // Applies one "section.key" override. Relative paths resolve against
  // `base_dir`. Throws Error(kUsage) for an unknown key or a bad value.
  void set(std::string_view key, std::string_view value,
           const std::filesystem::path& base_dir = {});

  // Configuration recorded in manifests; paths reduced to file names so the
  // record does not depend on where the run happened.
  nlohmann::json to_json() const;
};

// Runs one stage and returns its summary. Throws Error with kUsage for an
// invalid configuration, kDependency when an upstream snapshot is missing,
// kData for malformed inputs and kIo for unreadable or unwritable files.
nlohmann::json run_stage(const RunConfig& config, Stage stage);

// Snapshot readers and writers, exposed for tests and tools.
void write_tweets(const std::filesystem::path& path, const std::vector<corpus::Tweet>& tweets);
std::vector<corpus::Tweet> read_tweets(const std::filesystem::path& path);
void write_documents(const std::filesystem::path& path,
                     const std::vector<preprocess::Document>& docs);
std::vector<preprocess::Document> read_documents(const std::filesystem::path& path);

struct SentimentRow {
  std::string id;
  sentiment::SentimentScore score;
  sentiment::Polarity polarity{};
};
std::vector<SentimentRow> read_sentiment(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

}  // namespace sentopic::pipeline
