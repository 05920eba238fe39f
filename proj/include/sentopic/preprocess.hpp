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
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentopic/corpus.hpp"

// Tweet text normalization into LDA-ready token documents.
//
// Per tweet: strip handles, URLs, emoji and hashtags; split on
// non-alphanumeric boundaries; lowercase; drop stopwords and non-word
// tokens; lemmatize. Corpus-wide: merge frequent adjacent pairs into
// underscore-joined bigram tokens, then drop documents shorter than four
// tokens.
namespace sentopic::preprocess {

inline constexpr std::size_t kMinDocumentTokens = 4;

struct Document {
  std::string tweet_id;
  std::vector<std::string> tokens;
  std::optional<std::string> country;
  corpus::BrandSet brands;
};

// Dictionary lemmatizer: irregular-form exceptions first, then -s/-es/-ed/
// -ing/-ies suffix rules accepted only when they land on a known verb or
// noun base form. A known word keeps its form unless it ends in a single
// "s". Unknown words map to themselves.
class Lemmatizer {
 public:
  enum PartOfSpeech : std::uint8_t { kNoun = 1, kVerb = 2, kAdjective = 4, kAdverb = 8 };

  Lemmatizer() = default;
  Lemmatizer(std::unordered_map<std::string, std::string> exceptions,
             std::unordered_map<std::string, std::uint8_t> base_forms);

  // `lemmas_tsv`: surface<TAB>lemma. `words_tsv`: word<TAB>pos letters from
  // "nvar"; may be empty to disable the suffix rules.
  static Lemmatizer load(const std::filesystem::path& lemmas_tsv,
                         const std::filesystem::path& words_tsv);

  // Iterated to a fixed point, so lemmatize(lemmatize(w)) == lemmatize(w).
  std::string lemmatize(const std::string& word) const;

  bool is_known_word(const std::string& word) const;

 private:
  std::string step(const std::string& word) const;
  bool has_pos(const std::string& word, std::uint8_t pos) const;

  std::unordered_map<std::string, std::string> exceptions_;
  std::unordered_map<std::string, std::uint8_t> base_forms_;
};

// ASCII letters only, at least `min_length` characters.
bool ascii_word(std::string_view token, std::size_t min_length = 2);

struct Lexicons {
  std::unordered_set<std::string> stopwords;
  Lemmatizer lemmatizer;
  // Which tokens count as English words.
  std::function<bool(std::string_view)> allowed_charset = [](std::string_view t) {
    return ascii_word(t);
  };
  // When set, tokens must also be known dictionary words.
  bool require_dictionary_word = false;

  struct Paths {
    std::vector<std::filesystem::path> stopword_files;
    std::filesystem::path lemmas;
    std::filesystem::path words;
  };
  static Lexicons load(const Paths& paths);

  bool accepts(const std::string& token) const;
};

// Removes @handles, URLs (http/https, www., t.co), #hashtags and emoji code
// points, each leaving a word break, then collapses whitespace runs to one
// space and trims.
std::string strip_entities(std::string_view text);

// Expects entity-stripped text.
std::vector<std::string> tokenize_normalize(std::string_view text, const Lexicons& lex);

struct Phrase {
  std::string first;
  std::string second;
  std::size_t count = 0;
  double score = 0.0;

  std::string joined() const { return first + "_" + second; }
};

struct BigramResult {
  std::vector<Phrase> phrases;  // sorted by joined token
  std::vector<std::vector<std::string>> docs;
  std::size_t merges = 0;
};

// Accepts adjacent pairs (a, b) with count(a,b) >= min_count and
//   (count(a,b) - min_count) * N / (count(a) * count(b)) >= threshold,
// N being the corpus token count, then rewrites each document left to right
// in one non-overlapping pass. Throws Error(kUsage) if min_count < 1.
BigramResult detect_bigrams(std::span<const std::vector<std::string>> docs,
                            std::size_t min_count, double threshold);

struct FilterResult {
  std::vector<Document> kept;
  std::size_t dropped = 0;
};

FilterResult filter_short(std::vector<Document> docs,
                          std::size_t min_tokens = kMinDocumentTokens);

struct PreprocessOptions {
  std::size_t bigram_min_count = 5;
  double bigram_threshold = 10.0;
  std::size_t min_tokens = kMinDocumentTokens;
  bool detect_phrases = true;
  unsigned threads = 1;
};

struct PreprocessStats {
  std::size_t input = 0;
  std::size_t dropped_short = 0;
  std::size_t emitted = 0;
  std::size_t bigram_merges = 0;
};

struct PreprocessResult {
  std::vector<Document> documents;
  std::vector<Phrase> phrases;
  PreprocessStats stats;
};

PreprocessResult preprocess(std::span<const corpus::Tweet> tweets, const Lexicons& lex,
                            const PreprocessOptions& options);

}  // namespace sentopic::preprocess
