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

#include "sentopic/preprocess.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "sentopic/error.hpp"
#include "sentopic/parallel.hpp"
#include "sentopic/tsv.hpp"
#include "sentopic/unicode.hpp"

namespace sentopic::preprocess {

namespace {

struct SuffixRule {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr SuffixRule kVerbRules[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},  {"es", ""},
                                     {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};

constexpr SuffixRule kNounRules[] = {{"s", ""},    {"ses", "s"},   {"ves", "f"},
                                     {"xes", "x"}, {"zes", "z"},   {"ches", "ch"},
                                     {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};

constexpr int kMaxLemmaSteps = 8;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with_icase(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (s.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[pos + i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

bool is_word_char(char32_t cp) { return cp == U'_' || unicode::is_alnum(cp); }

}  // namespace

Lemmatizer::Lemmatizer(std::unordered_map<std::string, std::string> exceptions,
                       std::unordered_map<std::string, std::uint8_t> base_forms)
    : exceptions_(std::move(exceptions)), base_forms_(std::move(base_forms)) {}

Lemmatizer Lemmatizer::load(const std::filesystem::path& lemmas_tsv,
                            const std::filesystem::path& words_tsv) {
  std::unordered_map<std::string, std::string> exceptions;
  for (auto& [surface, lemma] : read_tsv_pairs(lemmas_tsv)) {
    exceptions.insert_or_assign(unicode::to_lower(surface), unicode::to_lower(lemma));
  }
  std::unordered_map<std::string, std::uint8_t> base_forms;
  if (!words_tsv.empty()) {
    for (auto& [word, tags] : read_tsv_pairs(words_tsv)) {
      std::uint8_t mask = 0;
      for (const char t : tags) {
        switch (t) {
          case 'n': mask |= kNoun; break;
          case 'v': mask |= kVerb; break;
          case 'a': mask |= kAdjective; break;
          case 'r': mask |= kAdverb; break;
          default: throw_data(words_tsv.string() + ": bad part-of-speech tag in '" + tags + "'");
        }
      }
      base_forms[unicode::to_lower(word)] |= mask;
    }
  }
  return Lemmatizer(std::move(exceptions), std::move(base_forms));
}

bool Lemmatizer::has_pos(const std::string& word, std::uint8_t pos) const {
  const auto it = base_forms_.find(word);
  return it != base_forms_.end() && (it->second & pos) != 0;
}

bool Lemmatizer::is_known_word(const std::string& word) const {
  return base_forms_.count(word) != 0 || exceptions_.count(word) != 0;
}

std::string Lemmatizer::step(const std::string& word) const {
  if (const auto it = exceptions_.find(word); it != exceptions_.end()) return it->second;
  const auto try_rules = [&](std::span<const SuffixRule> rules,
                             std::uint8_t pos) -> std::optional<std::string> {
    for (const auto& rule : rules) {
      if (word.size() <= rule.suffix.size() || !ends_with(word, rule.suffix)) continue;
      std::string candidate = word.substr(0, word.size() - rule.suffix.size());
      candidate += rule.replacement;
      if (has_pos(candidate, pos)) return candidate;
    }
    return std::nullopt;
  };
  const auto by_rules = [&]() -> std::optional<std::string> {
    if (auto verb = try_rules(kVerbRules, kVerb)) return verb;
    return try_rules(kNounRules, kNoun);
  };
  // A plural that is also listed as a word of its own ("effects") still
  // reduces; "-ss" words ("boss") and other known forms ("morning") stay.
  if (ends_with(word, "s") && !ends_with(word, "ss")) {
    if (auto lemma = by_rules()) return *lemma;
  }
  if (has_pos(word, kNoun | kVerb)) return word;
  if (auto lemma = by_rules()) return *lemma;
  return word;
}

std::string Lemmatizer::lemmatize(const std::string& word) const {
  std::vector<std::string> chain{word};
  for (int i = 0; i < kMaxLemmaSteps; ++i) {
    std::string next = step(chain.back());
    if (next == chain.back()) return next;
    const auto seen = std::find(chain.begin(), chain.end(), next);
    if (seen != chain.end()) {
      // Exception cycle: every member resolves to the smallest one.
      return *std::min_element(seen, chain.end());
    }
    chain.push_back(std::move(next));
  }
  return chain.back();
}

bool ascii_word(std::string_view token, std::size_t min_length) {
  if (token.size() < min_length) return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); });
}

Lexicons Lexicons::load(const Paths& paths) {
  Lexicons lex;
  for (const auto& file : paths.stopword_files) {
    for (auto& w : read_word_list(file)) lex.stopwords.insert(unicode::to_lower(w));
  }
  lex.lemmatizer = Lemmatizer::load(paths.lemmas, paths.words);
  return lex;
}

bool Lexicons::accepts(const std::string& token) const {
  if (stopwords.count(token) != 0) return false;
  if (allowed_charset && !allowed_charset(token)) return false;
  if (require_dictionary_word && !lemmatizer.is_known_word(token)) return false;
  return true;
}

std::string strip_entities(std::string_view text) {
  const auto cps = unicode::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto skip_word_run = [&](std::size_t from) {
    while (from < cps.size() && is_word_char(cps[from].value)) ++from;
    return from;
  };
  const auto skip_to_space = [&](std::size_t from) {
    while (from < cps.size() && !unicode::is_space(cps[from].value)) ++from;
    return from;
  };
  while (i < cps.size()) {
    const char32_t c = cps[i].value;
    const std::size_t off = cps[i].offset;
    if ((c == U'@' || c == U'#') && i + 1 < cps.size() && is_word_char(cps[i + 1].value)) {
      i = skip_word_run(i + 1);
      out += ' ';
      continue;
    }
    const bool after_word = i > 0 && unicode::is_alnum(cps[i - 1].value);
    if (!after_word &&
        (starts_with_icase(text, off, "http://") || starts_with_icase(text, off, "https://") ||
         starts_with_icase(text, off, "www.") || starts_with_icase(text, off, "t.co/"))) {
      i = skip_to_space(i);
      out += ' ';
      continue;
    }
    if (unicode::is_emoji(c)) {
      out += ' ';
      ++i;
      continue;
    }
    out.append(text.substr(off, cps[i].length));
    ++i;
  }
  std::string collapsed;
  collapsed.reserve(out.size());
  for (const auto& word : unicode::split_whitespace(out)) {
    if (!collapsed.empty()) collapsed += ' ';
    collapsed += word;
  }
  return collapsed;
}

std::vector<std::string> tokenize_normalize(std::string_view text, const Lexicons& lex) {
  std::vector<std::string> out;
  const auto cps = unicode::decode(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!unicode::is_alnum(cps[i].value)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && unicode::is_alnum(cps[j].value)) ++j;
    const std::size_t begin = cps[i].offset;
    const std::size_t end = cps[j - 1].offset + cps[j - 1].length;
    i = j;

    std::string token = unicode::to_lower(text.substr(begin, end - begin));
    if (!lex.accepts(token)) continue;
    std::string lemma = lex.lemmatizer.lemmatize(token);
    // The lemma must also pass, otherwise a second pass over the output
    // would drop it.
    if (lemma != token && !lex.accepts(lemma)) continue;
    out.push_back(std::move(lemma));
  }
  return out;
}

BigramResult detect_bigrams(std::span<const std::vector<std::string>> docs,
                            std::size_t min_count, double threshold) {
  if (min_count < 1) throw_usage("bigram min_count must be >= 1");

  std::unordered_map<std::string, std::size_t> unigrams;
  std::map<std::pair<std::string, std::string>, std::size_t> pairs;
  std::size_t total = 0;
  for (const auto& doc : docs) {
    total += doc.size();
    for (std::size_t i = 0; i < doc.size(); ++i) {
      ++unigrams[doc[i]];
      if (i + 1 < doc.size()) ++pairs[{doc[i], doc[i + 1]}];
    }
  }

  BigramResult result;
  std::map<std::pair<std::string, std::string>, std::size_t> accepted;
  for (const auto& [pair, count] : pairs) {
    if (count < min_count) continue;
    const double ca = static_cast<double>(unigrams[pair.first]);
    const double cb = static_cast<double>(unigrams[pair.second]);
    const double score = (static_cast<double>(count) - static_cast<double>(min_count)) *
                         static_cast<double>(total) / (ca * cb);
    if (score < threshold) continue;
    accepted.emplace(pair, result.phrases.size());
    result.phrases.push_back({pair.first, pair.second, count, score});
  }
  std::sort(result.phrases.begin(), result.phrases.end(),
            [](const Phrase& a, const Phrase& b) { return a.joined() < b.joined(); });

  result.docs.reserve(docs.size());
  for (const auto& doc : docs) {
    std::vector<std::string> rewritten;
    rewritten.reserve(doc.size());
    std::size_t i = 0;
    while (i < doc.size()) {
      if (i + 1 < doc.size() && accepted.count({doc[i], doc[i + 1]}) != 0) {
        rewritten.push_back(doc[i] + "_" + doc[i + 1]);
        ++result.merges;
        i += 2;
      } else {
        rewritten.push_back(doc[i]);
        ++i;
      }
    }
    result.docs.push_back(std::move(rewritten));
  }
  return result;
}

FilterResult filter_short(std::vector<Document> docs, std::size_t min_tokens) {
  FilterResult result;
  result.kept.reserve(docs.size());
  for (auto& doc : docs) {
    if (doc.tokens.size() < min_tokens) {
      ++result.dropped;
    } else {
      result.kept.push_back(std::move(doc));
    }
  }
  return result;
}

PreprocessResult preprocess(std::span<const corpus::Tweet> tweets, const Lexicons& lex,
                            const PreprocessOptions& options) {
  std::vector<std::vector<std::string>> token_lists(tweets.size());
  parallel_for(tweets.size(), options.threads, [&](std::size_t i) {
    token_lists[i] = tokenize_normalize(strip_entities(tweets[i].text), lex);
  });

  PreprocessResult result;
  result.stats.input = tweets.size();
  if (options.detect_phrases && !token_lists.empty()) {
    auto bigrams = detect_bigrams(token_lists, options.bigram_min_count, options.bigram_threshold);
    token_lists = std::move(bigrams.docs);
    result.phrases = std::move(bigrams.phrases);
    result.stats.bigram_merges = bigrams.merges;
  }

  std::vector<Document> docs;
  docs.reserve(tweets.size());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    docs.push_back({tweets[i].id, std::move(token_lists[i]), tweets[i].country, tweets[i].brands});
  }
  auto filtered = filter_short(std::move(docs), options.min_tokens);
  result.documents = std::move(filtered.kept);
  result.stats.dropped_short = filtered.dropped;
  result.stats.emitted = result.documents.size();
  return result;
}

}  // namespace sentopic::preprocess
