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

#include "sentopic/pipeline.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#define TOML_EXCEPTIONS 1
#include <tomlplusplus/toml.hpp>

#include "sentopic/analytics.hpp"
#include "sentopic/csv.hpp"
#include "sentopic/error.hpp"
#include "sentopic/parallel.hpp"
#include "sentopic/tsv.hpp"

#ifndef SENTOPIC_RESOURCE_DIR
#define SENTOPIC_RESOURCE_DIR "resources"
#endif
#ifndef SENTOPIC_VERSION
#define SENTOPIC_VERSION "0.0.0"
#endif

namespace sentopic::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kTweetsFile = "tweets.jsonl";
constexpr const char* kDocumentsFile = "documents.jsonl";
constexpr const char* kPhrasesFile = "phrases.tsv";
constexpr const char* kSentimentFile = "sentiment.csv";
constexpr const char* kModelFile = "model.json";
constexpr const char* kTopicsFile = "topics.json";
constexpr const char* kCoherenceFile = "coherence.json";
constexpr const char* kReportDir = "report";
constexpr const char* kManifestDir = "manifests";

constexpr std::array<std::pair<Stage, std::string_view>, 6> kStageNames = {{
    {Stage::kIngest, "ingest"},
    {Stage::kPreprocess, "preprocess"},
    {Stage::kSentiment, "sentiment"},
    {Stage::kTopics, "topics"},
    {Stage::kSweepK, "sweep-k"},
    {Stage::kReport, "report"},
}};

[[noreturn]] void throw_dependency(const std::string& what) {
  throw Error(ErrorKind::kDependency, what);
}

// --- value parsing for config keys -----------------------------------------

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw_usage("config key '" + std::string(key) + "': bad number '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw_usage("config key '" + std::string(key) + "': expected true or false, got '" +
              std::string(value) + "'");
}

char parse_delimiter(std::string_view key, std::string_view value) {
  if (value == "tab" || value == "\\t" || value == "\t") return '\t';
  if (value.size() != 1 || value == "\"" || value == "\n" || value == "\r") {
    throw_usage("config key '" + std::string(key) + "': delimiter must be one character");
  }
  return value[0];
}

fs::path resolve_path(std::string_view value, const fs::path& base) {
  fs::path p{std::string(value)};
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value,
                                  const fs::path& base)>;

Setter path_field(fs::path RunConfig::*field) {
  return [field](RunConfig& c, std::string_view, std::string_view v, const fs::path& base) {
    c.*field = resolve_path(v, base);
  };
}

Setter resource_field(fs::path ResourcePaths::*field) {
  return [field](RunConfig& c, std::string_view, std::string_view v, const fs::path& base) {
    c.resources.*field = resolve_path(v, base);
  };
}

template <typename T>
Setter number(T& (*select)(RunConfig&)) {
  return [select](RunConfig& c, std::string_view k, std::string_view v, const fs::path&) {
    select(c) = parse_number<T>(k, v);
  };
}

Setter flag(bool& (*select)(RunConfig&)) {
  return [select](RunConfig& c, std::string_view k, std::string_view v, const fs::path&) {
    select(c) = parse_bool(k, v);
  };
}

Setter text(std::string& (*select)(RunConfig&)) {
  return [select](RunConfig& c, std::string_view, std::string_view v, const fs::path&) {
    select(c) = std::string(v);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"input.path", path_field(&RunConfig::input)},
      {"output.dir", path_field(&RunConfig::output_dir)},
      {"columns.id", text([](RunConfig& c) -> std::string& { return c.columns.id; })},
      {"columns.text", text([](RunConfig& c) -> std::string& { return c.columns.text; })},
      {"columns.location", text([](RunConfig& c) -> std::string& { return c.columns.location; })},
      {"columns.date", text([](RunConfig& c) -> std::string& { return c.columns.date; })},
      {"columns.delimiter",
       [](RunConfig& c, std::string_view k, std::string_view v, const fs::path&) {
         c.columns.delimiter = parse_delimiter(k, v);
       }},
      {"corpus.require_country", flag([](RunConfig& c) -> bool& { return c.require_country; })},
      {"resources.dir", resource_field(&ResourcePaths::dir)},
      {"resources.lexicon", resource_field(&ResourcePaths::lexicon)},
      {"resources.emoji", resource_field(&ResourcePaths::emoji)},
      {"resources.stopwords", resource_field(&ResourcePaths::stopwords)},
      {"resources.meaningless", resource_field(&ResourcePaths::meaningless)},
      {"resources.lemmas", resource_field(&ResourcePaths::lemmas)},
      {"resources.words", resource_field(&ResourcePaths::words)},
      {"resources.gazetteer", resource_field(&ResourcePaths::gazetteer)},
      {"resources.brands", resource_field(&ResourcePaths::brands)},
      {"preprocess.bigram_min_count",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.preprocess.bigram_min_count; })},
      {"preprocess.bigram_threshold",
       number<double>([](RunConfig& c) -> double& { return c.preprocess.bigram_threshold; })},
      {"preprocess.min_tokens",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.preprocess.min_tokens; })},
      {"preprocess.detect_phrases",
       flag([](RunConfig& c) -> bool& { return c.preprocess.detect_phrases; })},
      {"preprocess.require_dictionary_word",
       flag([](RunConfig& c) -> bool& { return c.require_dictionary_word; })},
      {"lda.num_topics", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.lda.num_topics; })},
      {"lda.alpha", number<double>([](RunConfig& c) -> double& { return c.lda.alpha; })},
      {"lda.eta", number<double>([](RunConfig& c) -> double& { return c.lda.eta; })},
      {"lda.iterations", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.lda.iterations; })},
      {"lda.burn_in", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.lda.burn_in; })},
      {"lda.seed", number<std::uint64_t>([](RunConfig& c) -> std::uint64_t& { return c.lda.seed; })},
      {"sweep.k_min", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.sweep.k_min; })},
      {"sweep.k_max", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.sweep.k_max; })},
      {"sweep.top_n", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.sweep.top_n; })},
      {"sweep.holdout_every",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.sweep.holdout_every; })},
      {"sweep.in_topics", flag([](RunConfig& c) -> bool& { return c.sweep_in_topics; })},
      {"report.top_terms", number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.report.top_terms; })},
      {"report.top_countries",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.report.top_countries; })},
      {"report.emotional_top",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.report.emotional_top; })},
      {"report.topic_limit",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.report.topic_limit; })},
      {"report.topic_words",
       number<std::size_t>([](RunConfig& c) -> std::size_t& { return c.report.topic_words; })},
      {"report.svg", flag([](RunConfig& c) -> bool& { return c.report.svg; })},
      {"run.threads", number<unsigned>([](RunConfig& c) -> unsigned& { return c.threads; })},
  };
  return table;
}

std::string toml_scalar(const toml::node& node, const std::string& key) {
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return std::to_string(i->get());
  if (const auto* b = node.as_boolean()) return b->get() ? "true" : "false";
  if (const auto* f = node.as_floating_point()) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, f->get());
    return std::string(buf, ptr);
  }
  throw_usage("config key '" + key + "': unsupported value type");
}

// --- small helpers ----------------------------------------------------------

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string require_snapshot(const fs::path& path, Stage producer) {
  if (!fs::exists(path)) {
    throw_dependency("missing " + path.filename().string() + " in " + path.parent_path().string() +
                     "; run the '" + std::string(to_string(producer)) + "' stage first");
  }
  return read_file(path);
}

void require_file(const fs::path& path, std::string_view what) {
  if (path.empty()) throw_usage(std::string(what) + " path is not configured");
  if (!fs::is_regular_file(path)) throw_io(std::string(what) + " not found: " + path.string());
}

json brand_names(corpus::BrandSet brands) {
  json out = json::array();
  for (const auto b : brands.to_vector()) out.push_back(corpus::brand_name(b));
  return out;
}

corpus::BrandSet parse_brands(const json& j) {
  corpus::BrandSet out;
  for (const auto& name : j) {
    const auto b = corpus::brand_from_name(name.get<std::string>());
    if (!b) throw_data("unknown brand '" + name.get<std::string>() + "' in snapshot");
    out.insert(*b);
  }
  return out;
}

json optional_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<std::string> read_optional_string(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

std::string tweets_jsonl(const std::vector<corpus::Tweet>& tweets) {
  std::string s;
  for (const auto& t : tweets) {
    s += json{{"id", t.id},
              {"text", t.text},
              {"location", t.location_raw},
              {"created_at", corpus::format_timestamp(t.created_at)},
              {"country", optional_string(t.country)},
              {"brands", brand_names(t.brands)}}
             .dump() +
         "\n";
  }
  return s;
}

std::string documents_jsonl(const std::vector<preprocess::Document>& docs) {
  std::string s;
  for (const auto& d : docs) {
    s += json{{"id", d.tweet_id},
              {"tokens", d.tokens},
              {"country", optional_string(d.country)},
              {"brands", brand_names(d.brands)}}
             .dump() +
         "\n";
  }
  return s;
}

template <typename Fn>
void for_each_jsonl(const std::string& contents, const fs::path& path, Fn&& fn) {
  std::istringstream in(contents);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw_data(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::vector<corpus::Tweet> parse_tweets(const std::string& contents, const fs::path& path) {
  std::vector<corpus::Tweet> out;
  for_each_jsonl(contents, path, [&](const json& j) {
    corpus::Tweet t;
    t.id = j.at("id").get<std::string>();
    t.text = j.at("text").get<std::string>();
    t.location_raw = j.at("location").get<std::string>();
    const auto ts = corpus::parse_timestamp(j.at("created_at").get<std::string>());
    if (!ts) throw_data(path.string() + ": bad timestamp for tweet " + t.id);
    t.created_at = *ts;
    t.country = read_optional_string(j.at("country"));
    t.brands = parse_brands(j.at("brands"));
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<preprocess::Document> parse_documents(const std::string& contents, const fs::path& path) {
  std::vector<preprocess::Document> out;
  for_each_jsonl(contents, path, [&](const json& j) {
    preprocess::Document d;
    d.tweet_id = j.at("id").get<std::string>();
    d.tokens = j.at("tokens").get<std::vector<std::string>>();
    d.country = read_optional_string(j.at("country"));
    d.brands = parse_brands(j.at("brands"));
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<SentimentRow> parse_sentiment(const std::string& contents, const fs::path& path) {
  std::istringstream in(contents);
  CsvReader csv(in);
  std::vector<std::string> fields;
  std::vector<SentimentRow> out;
  if (csv.next(fields) != CsvReader::Status::kRecord || fields.size() != 6 || fields[0] != "id") {
    throw_data(path.string() + ": missing or bad header");
  }
  while (true) {
    const auto status = csv.next(fields);
    if (status == CsvReader::Status::kEnd) break;
    if (status == CsvReader::Status::kMalformed || fields.size() != 6) {
      throw_data(path.string() + ":" + std::to_string(csv.record_line()) + ": malformed row");
    }
    SentimentRow row;
    row.id = fields[0];
    try {
      row.score.pos = parse_number<double>("pos", fields[1]);
      row.score.neu = parse_number<double>("neu", fields[2]);
      row.score.neg = parse_number<double>("neg", fields[3]);
      row.score.compound = parse_number<double>("compound", fields[4]);
      row.polarity = sentiment::polarity_from_string(fields[5]);
    } catch (const Error& e) {
      throw_data(path.string() + ":" + std::to_string(csv.record_line()) + ": " + e.what());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// --- manifests --------------------------------------------------------------

class Manifest {
 public:
  Manifest(const RunConfig& config, Stage stage) : config_(config), stage_(stage) {}

  void input(const fs::path& path, std::string_view bytes) { record(inputs_, path, bytes); }
  void input_file(const fs::path& path) { input(path, read_file(path)); }
  void output(const fs::path& path, const std::string& bytes) {
    write_file(path, bytes);
    record(outputs_, path, bytes);
  }

  void write(const json& summary) const {
    json j;
    j["tool"] = "sentopic";
    j["version"] = version();
    j["stage"] = to_string(stage_);
    j["seed"] = config_.lda.seed;
    j["config"] = config_.to_json();
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    j["summary"] = summary;
    write_file(config_.output_dir / kManifestDir / (std::string(to_string(stage_)) + ".json"), dump(j));
  }

 private:
  void record(json& list, const fs::path& path, std::string_view bytes) const {
    std::string name = path.lexically_relative(config_.output_dir).generic_string();
    if (name.empty() || name.starts_with("..")) name = path.filename().string();
    list.push_back({{"name", name}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}});
  }

  const RunConfig& config_;
  Stage stage_;
  json inputs_ = json::array();
  json outputs_ = json::array();
};

// --- stages -----------------------------------------------------------------

json stats_json(const corpus::IngestStats& s) {
  return {{"total_rows", s.total_rows},
          {"emitted", s.emitted},
          {"dropped_empty_location", s.dropped_empty_location},
          {"dropped_unresolved_location", s.dropped_unresolved_location},
          {"dropped_malformed", s.dropped_malformed},
          {"dropped_duplicate", s.dropped_duplicate},
          {"dropped", s.dropped()}};
}

json run_ingest(const RunConfig& config) {
  const auto res = config.resources.resolved();
  require_file(config.input, "input CSV");
  require_file(res.gazetteer, "gazetteer");
  require_file(res.brands, "brand table");
  Manifest manifest(config, Stage::kIngest);
  manifest.input_file(config.input);
  manifest.input_file(res.gazetteer);
  manifest.input_file(res.brands);

  auto gaz = std::make_shared<const corpus::Gazetteer>(corpus::Gazetteer::load(res.gazetteer));
  auto brands = std::make_shared<const corpus::BrandTable>(corpus::BrandTable::load(res.brands));
  corpus::IngestOptions options;
  options.columns = config.columns;
  options.require_country = config.require_country;
  const auto result = corpus::ingest_csv(config.input, options, gaz, brands);

  manifest.output(config.output_dir / kTweetsFile, tweets_jsonl(result.tweets));
  const json summary = {{"stage", "ingest"}, {"tweets", result.tweets.size()},
                        {"counts", stats_json(result.stats)}};
  manifest.output(config.output_dir / "ingest.json", dump(summary));
  manifest.write(summary);
  return summary;
}

preprocess::Lexicons load_preprocess_lexicons(const RunConfig& config, Manifest& manifest) {
  const auto res = config.resources.resolved();
  preprocess::Lexicons::Paths paths;
  require_file(res.stopwords, "stopword list");
  paths.stopword_files.push_back(res.stopwords);
  if (!res.meaningless.empty()) {
    require_file(res.meaningless, "meaningless-word list");
    paths.stopword_files.push_back(res.meaningless);
  }
  require_file(res.lemmas, "lemma table");
  paths.lemmas = res.lemmas;
  if (!res.words.empty()) {
    require_file(res.words, "word list");
    paths.words = res.words;
  }
  for (const auto& p : paths.stopword_files) manifest.input_file(p);
  manifest.input_file(paths.lemmas);
  if (!paths.words.empty()) manifest.input_file(paths.words);
  auto lex = preprocess::Lexicons::load(paths);
  lex.require_dictionary_word = config.require_dictionary_word;
  return lex;
}

json run_preprocess(const RunConfig& config) {
  Manifest manifest(config, Stage::kPreprocess);
  const fs::path tweets_path = config.output_dir / kTweetsFile;
  const std::string tweets_bytes = require_snapshot(tweets_path, Stage::kIngest);
  manifest.input(tweets_path, tweets_bytes);
  const auto tweets = parse_tweets(tweets_bytes, tweets_path);
  const auto lex = load_preprocess_lexicons(config, manifest);

  auto options = config.preprocess;
  options.threads = config.threads;
  const auto result = preprocess::preprocess(tweets, lex, options);

  manifest.output(config.output_dir / kDocumentsFile, documents_jsonl(result.documents));
  std::string phrases;
  for (const auto& p : result.phrases) phrases += p.joined() + "\t" + format_fixed(p.score, 6) + "\n";
  manifest.output(config.output_dir / kPhrasesFile, phrases);

  const json summary = {{"stage", "preprocess"},
                        {"input", result.stats.input},
                        {"dropped_short", result.stats.dropped_short},
                        {"documents", result.stats.emitted},
                        {"phrases", result.phrases.size()},
                        {"bigram_merges", result.stats.bigram_merges}};
  manifest.write(summary);
  return summary;
}

json run_sentiment(const RunConfig& config) {
  Manifest manifest(config, Stage::kSentiment);
  const fs::path tweets_path = config.output_dir / kTweetsFile;
  const std::string tweets_bytes = require_snapshot(tweets_path, Stage::kIngest);
  manifest.input(tweets_path, tweets_bytes);
  const auto tweets = parse_tweets(tweets_bytes, tweets_path);
  const auto res = config.resources.resolved();
  require_file(res.lexicon, "sentiment lexicon");
  require_file(res.emoji, "emoji map");
  manifest.input_file(res.lexicon);
  manifest.input_file(res.emoji);
  const auto lex = sentiment::SentimentLexicon::load(res.lexicon, res.emoji);

  std::vector<sentiment::SentimentScore> scores(tweets.size());
  parallel_for(tweets.size(), config.threads,
               [&](std::size_t i) { scores[i] = sentiment::score(tweets[i].text, lex); });

  std::string csv = "id,pos,neu,neg,compound,polarity\n";
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    const auto& s = scores[i];
    const auto p = sentiment::classify(s);
    ++counts[static_cast<int>(p)];
    csv += csv_field(tweets[i].id) + ',' + format_fixed(s.pos, 3) + ',' + format_fixed(s.neu, 3) + ',' +
           format_fixed(s.neg, 3) + ',' + format_fixed(s.compound, 4) + ',' +
           std::string(sentiment::to_string(p)) + '\n';
  }
  manifest.output(config.output_dir / kSentimentFile, csv);
  const json summary = {{"stage", "sentiment"},
                        {"tweets", tweets.size()},
                        {"positive", counts[static_cast<int>(sentiment::Polarity::kPositive)]},
                        {"neutral", counts[static_cast<int>(sentiment::Polarity::kNeutral)]},
                        {"negative", counts[static_cast<int>(sentiment::Polarity::kNegative)]}};
  manifest.write(summary);
  return summary;
}

std::vector<std::vector<std::string>> token_lists(const std::vector<preprocess::Document>& docs) {
  std::vector<std::vector<std::string>> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(d.tokens);
  return out;
}

void check_sweep_range(const RunConfig& config) {
  if (config.sweep.k_min < 1 || config.sweep.k_max < config.sweep.k_min) {
    throw_usage("empty topic-count range " + std::to_string(config.sweep.k_min) + ".." +
                std::to_string(config.sweep.k_max));
  }
  if (config.sweep.top_n == 0) throw_usage("sweep.top_n must be >= 1");
}

json write_sweep(const RunConfig& config, const std::vector<std::vector<std::string>>& docs,
                 Manifest& manifest) {
  auto options = config.sweep;
  options.threads = config.threads;
  const auto result = lda::sweep_k(docs, config.lda, options);
  json j = lda::to_json(result);
  j["k_min"] = options.k_min;
  j["k_max"] = options.k_max;
  j["base_seed"] = config.lda.seed;
  manifest.output(config.output_dir / kCoherenceFile, dump(j));
  return result.best_k ? json(*result.best_k) : json(nullptr);
}

json run_topics(const RunConfig& config) {
  config.lda.validate();
  if (config.sweep_in_topics) check_sweep_range(config);
  Manifest manifest(config, Stage::kTopics);
  const fs::path docs_path = config.output_dir / kDocumentsFile;
  const std::string docs_bytes = require_snapshot(docs_path, Stage::kPreprocess);
  manifest.input(docs_path, docs_bytes);
  const auto docs = parse_documents(docs_bytes, docs_path);
  const auto tokens = token_lists(docs);
  std::vector<std::string> ids;
  ids.reserve(docs.size());
  for (const auto& d : docs) ids.push_back(d.tweet_id);

  const auto model = lda::fit(lda::EncodedCorpus::encode(tokens, ids), config.lda);
  model.check_invariants();
  manifest.output(config.output_dir / kModelFile, model.to_json().dump() + "\n");

  json topics = json::array();
  const lda::CooccurrenceIndex index(tokens);
  double total = 0.0;
  for (std::size_t k = 0; k < model.num_topics(); ++k) {
    const auto words = lda::top_words(model, k, config.sweep.top_n);
    const double c = lda::umass_coherence(words, index);
    total += c;
    topics.push_back({{"topic", k}, {"tokens", model.n_k(k)}, {"coherence", c}, {"words", words}});
  }
  const json report = {{"num_topics", model.num_topics()},
                       {"coherence", total / static_cast<double>(model.num_topics())},
                       {"log_likelihood", model.log_likelihood()},
                       {"warnings", model.warnings()},
                       {"topics", std::move(topics)}};
  manifest.output(config.output_dir / kTopicsFile, dump(report));

  json summary = {{"stage", "topics"},
                  {"documents", model.num_docs()},
                  {"vocabulary", model.vocab_size()},
                  {"num_topics", model.num_topics()},
                  {"coherence", report["coherence"]},
                  {"warnings", model.warnings()}};
  if (config.sweep_in_topics) summary["best_k"] = write_sweep(config, tokens, manifest);
  manifest.write(summary);
  return summary;
}

json run_sweep(const RunConfig& config) {
  config.lda.validate();
  check_sweep_range(config);
  Manifest manifest(config, Stage::kSweepK);
  const fs::path docs_path = config.output_dir / kDocumentsFile;
  const std::string docs_bytes = require_snapshot(docs_path, Stage::kPreprocess);
  manifest.input(docs_path, docs_bytes);
  const auto tokens = token_lists(parse_documents(docs_bytes, docs_path));
  json summary = {{"stage", "sweep-k"}, {"k_min", config.sweep.k_min}, {"k_max", config.sweep.k_max}};
  summary["best_k"] = write_sweep(config, tokens, manifest);
  manifest.write(summary);
  return summary;
}

json run_report(const RunConfig& config) {
  Manifest manifest(config, Stage::kReport);
  const fs::path out = config.output_dir;
  const std::string tweets_bytes = require_snapshot(out / kTweetsFile, Stage::kIngest);
  const std::string docs_bytes = require_snapshot(out / kDocumentsFile, Stage::kPreprocess);
  const std::string sentiment_bytes = require_snapshot(out / kSentimentFile, Stage::kSentiment);
  const std::string model_bytes = require_snapshot(out / kModelFile, Stage::kTopics);
  manifest.input(out / kTweetsFile, tweets_bytes);
  manifest.input(out / kDocumentsFile, docs_bytes);
  manifest.input(out / kSentimentFile, sentiment_bytes);
  manifest.input(out / kModelFile, model_bytes);
  const auto res = config.resources.resolved();
  require_file(res.lexicon, "sentiment lexicon");
  require_file(res.emoji, "emoji map");
  manifest.input_file(res.lexicon);
  manifest.input_file(res.emoji);

  const auto tweets = parse_tweets(tweets_bytes, out / kTweetsFile);
  const auto docs = parse_documents(docs_bytes, out / kDocumentsFile);
  const auto rows = parse_sentiment(sentiment_bytes, out / kSentimentFile);
  json model_json;
  try {
    model_json = json::parse(model_bytes);
  } catch (const json::exception& e) {
    throw_data((out / kModelFile).string() + ": " + e.what());
  }
  const auto model = lda::TopicModel::from_json(model_json);
  const auto lex = sentiment::SentimentLexicon::load(res.lexicon, res.emoji);

  std::unordered_map<std::string, sentiment::Polarity> polarity_of;
  for (const auto& r : rows) polarity_of.emplace(r.id, r.polarity);
  const auto lookup = [&](const std::string& id) {
    const auto it = polarity_of.find(id);
    if (it == polarity_of.end()) {
      throw_data("sentiment.csv has no row for tweet " + id + "; rerun the 'sentiment' stage");
    }
    return it->second;
  };
  std::vector<sentiment::Polarity> tweet_pol, doc_pol;
  for (const auto& t : tweets) tweet_pol.push_back(lookup(t.id));
  for (const auto& d : docs) doc_pol.push_back(lookup(d.tweet_id));

  const auto& model_ids = model.corpus().doc_ids;
  bool aligned = model.num_docs() == docs.size() && model_ids.size() == docs.size();
  for (std::size_t d = 0; aligned && d < docs.size(); ++d) aligned = model_ids[d] == docs[d].tweet_id;
  if (!aligned) throw_data("model.json was fitted on different documents; rerun the 'topics' stage");

  const fs::path dir = out / kReportDir;
  const auto& ro = config.report;
  const auto shares = analytics::country_shares(tweets);
  manifest.output(dir / "country_share.json", dump(analytics::to_json(shares)));

  const auto global = analytics::top_terms(docs, ro.top_terms, analytics::Scope::global());
  json freq;
  freq["global"] = analytics::to_json(global);
  freq["countries"] = json::array();
  for (std::size_t i = 0; i < std::min(ro.top_countries, shares.size()); ++i) {
    freq["countries"].push_back(
        analytics::to_json(analytics::top_terms(docs, ro.top_terms, analytics::Scope::country(shares[i].country))));
  }
  freq["brands"] = json::array();
  for (const auto b : corpus::kAllBrands) {
    freq["brands"].push_back(analytics::to_json(analytics::top_terms(docs, ro.top_terms, analytics::Scope::brand(b))));
  }
  freq["polarities"] = json::array();
  for (const auto p : {sentiment::Polarity::kPositive, sentiment::Polarity::kNeutral,
                       sentiment::Polarity::kNegative}) {
    freq["polarities"].push_back(
        analytics::to_json(analytics::top_terms(docs, ro.top_terms, analytics::Scope::polarity(p), doc_pol)));
  }
  manifest.output(dir / "frequency.json", dump(freq));
  manifest.output(dir / "frequency_global.csv", analytics::frequency_csv(global));

  manifest.output(dir / "emotional_words.json",
                  dump(analytics::to_json(analytics::emotional_top_words(docs, lex, ro.emotional_top))));

  const auto dist = analytics::sentiment_distribution(tweets, tweet_pol);
  manifest.output(dir / "sentiment_distribution.json", dump(analytics::to_json(dist)));
  manifest.output(dir / "sentiment_distribution.csv", analytics::distribution_csv(dist));
  if (ro.svg) manifest.output(dir / "sentiment_distribution.svg", analytics::distribution_svg(dist));

  const auto [pos_rank, neg_rank] = analytics::topic_popularity(model, doc_pol, ro.topic_words);
  manifest.output(dir / "topic_popularity.json",
                  dump({{"positive", analytics::to_json(pos_rank, ro.topic_limit)},
                        {"negative", analytics::to_json(neg_rank, ro.topic_limit)}}));

  const json summary = {{"stage", "report"},
                        {"tweets", tweets.size()},
                        {"documents", docs.size()},
                        {"countries", shares.size()},
                        {"num_topics", model.num_topics()}};
  manifest.write(summary);
  return summary;
}

}  // namespace

std::string_view version() { return SENTOPIC_VERSION; }

std::string_view to_string(Stage s) {
  for (const auto& [stage, name] : kStageNames) {
    if (stage == s) return name;
  }
  return "unknown";
}

Stage stage_from_string(std::string_view name) {
  for (const auto& [stage, n] : kStageNames) {
    if (n == name) return stage;
  }
  throw_usage("unknown stage '" + std::string(name) + "'");
}

ResourcePaths ResourcePaths::resolved() const {
  ResourcePaths r = *this;
  const fs::path base = dir.empty() ? fs::path(SENTOPIC_RESOURCE_DIR) : dir;
  const auto fill = [&](fs::path& p, const char* name) {
    if (p.empty()) p = base / name;
  };
  fill(r.lexicon, "vader_lexicon.tsv");
  fill(r.emoji, "emoji_map.tsv");
  fill(r.stopwords, "stopwords.txt");
  fill(r.meaningless, "meaningless.txt");
  fill(r.lemmas, "lemmas.tsv");
  fill(r.words, "english_words.tsv");
  fill(r.gazetteer, "gazetteer.tsv");
  fill(r.brands, "brands.tsv");
  r.dir = base;
  return r;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.resources.dir = SENTOPIC_RESOURCE_DIR;
  return c;
}

RunConfig RunConfig::load(const fs::path& toml_file) {
  toml::table table;
  try {
    table = toml::parse(read_file(toml_file), toml_file.string());
  } catch (const toml::parse_error& e) {
    throw_usage("config " + toml_file.string() + ": " + std::string(e.description()));
  }
  RunConfig c = defaults();
  const fs::path base = toml_file.parent_path();
  for (const auto& [section, node] : table) {
    const auto* sub = node.as_table();
    if (sub == nullptr) throw_usage("config: top-level key '" + std::string(section.str()) + "' must be a section");
    for (const auto& [key, value] : *sub) {
      const std::string full = std::string(section.str()) + "." + std::string(key.str());
      c.set(full, toml_scalar(value, full), base.empty() ? fs::path(".") : base);
    }
  }
  return c;
}

void RunConfig::set(std::string_view key, std::string_view value, const fs::path& base_dir) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw_usage("unknown config key '" + std::string(key) + "'");
  it->second(*this, key, value, base_dir);
}

json RunConfig::to_json() const {
  const auto name = [](const fs::path& p) { return p.filename().string(); };
  const auto res = resources.resolved();
  return {
      {"input", {{"path", name(input)}}},
      {"columns",
       {{"id", columns.id},
        {"text", columns.text},
        {"location", columns.location},
        {"date", columns.date},
        {"delimiter", std::string(1, columns.delimiter)}}},
      {"corpus", {{"require_country", require_country}}},
      {"resources",
       {{"lexicon", name(res.lexicon)},
        {"emoji", name(res.emoji)},
        {"stopwords", name(res.stopwords)},
        {"meaningless", name(res.meaningless)},
        {"lemmas", name(res.lemmas)},
        {"words", name(res.words)},
        {"gazetteer", name(res.gazetteer)},
        {"brands", name(res.brands)}}},
      {"preprocess",
       {{"bigram_min_count", preprocess.bigram_min_count},
        {"bigram_threshold", preprocess.bigram_threshold},
        {"min_tokens", preprocess.min_tokens},
        {"detect_phrases", preprocess.detect_phrases},
        {"require_dictionary_word", require_dictionary_word}}},
      {"lda",
       {{"num_topics", lda.num_topics},
        {"alpha", lda.alpha},
        {"eta", lda.eta},
        {"iterations", lda.iterations},
        {"burn_in", lda.burn_in},
        {"seed", lda.seed}}},
      {"sweep",
       {{"k_min", sweep.k_min},
        {"k_max", sweep.k_max},
        {"top_n", sweep.top_n},
        {"holdout_every", sweep.holdout_every},
        {"in_topics", sweep_in_topics}}},
      {"report",
       {{"top_terms", report.top_terms},
        {"top_countries", report.top_countries},
        {"emotional_top", report.emotional_top},
        {"topic_limit", report.topic_limit},
        {"topic_words", report.topic_words},
        {"svg", report.svg}}},
  };
}

json run_stage(const RunConfig& config, Stage stage) {
  switch (stage) {
    case Stage::kIngest: return run_ingest(config);
    case Stage::kPreprocess: return run_preprocess(config);
    case Stage::kSentiment: return run_sentiment(config);
    case Stage::kTopics: return run_topics(config);
    case Stage::kSweepK: return run_sweep(config);
    case Stage::kReport: return run_report(config);
  }
  throw Error(ErrorKind::kInternal, "unhandled stage");
}

void write_tweets(const fs::path& path, const std::vector<corpus::Tweet>& tweets) {
  write_file(path, tweets_jsonl(tweets));
}

std::vector<corpus::Tweet> read_tweets(const fs::path& path) { return parse_tweets(read_file(path), path); }

void write_documents(const fs::path& path, const std::vector<preprocess::Document>& docs) {
  write_file(path, documents_jsonl(docs));
}

std::vector<preprocess::Document> read_documents(const fs::path& path) {
  return parse_documents(read_file(path), path);
}

std::vector<SentimentRow> read_sentiment(const fs::path& path) {
  return parse_sentiment(read_file(path), path);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kInternal, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace sentopic::pipeline
