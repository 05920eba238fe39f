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

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "sentopic/error.hpp"

namespace sentopic::analytics {

namespace {

std::vector<TermCount> rank_counts(const std::unordered_map<std::string, std::size_t>& counts,
                                   std::size_t n) {
  std::vector<TermCount> all;
  all.reserve(counts.size());
  for (const auto& [term, count] : counts) all.push_back({term, count});
  const auto take = std::min(n, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take), all.end(),
                    [](const TermCount& a, const TermCount& b) {
                      return a.count != b.count ? a.count > b.count : a.term < b.term;
                    });
  all.resize(take);
  return all;
}

bool in_scope(const Document& doc, const Scope& scope, std::optional<Polarity> polarity) {
  switch (scope.kind) {
    case Scope::Kind::kGlobal:
      return true;
    case Scope::Kind::kCountry:
      return doc.country && *doc.country == scope.value;
    case Scope::Kind::kBrand: {
      const auto b = corpus::brand_from_name(scope.value);
      return b && doc.brands.contains(*b);
    }
    case Scope::Kind::kPolarity:
      return polarity && sentiment::to_string(*polarity) == scope.value;
  }
  return false;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

nlohmann::json counts_json(const PolarityCounts& c) {
  const auto p = c.proportions();
  return {{"positive", c.positive},
          {"neutral", c.neutral},
          {"negative", c.negative},
          {"total", c.total()},
          {"proportions", {{"positive", p[0]}, {"neutral", p[1]}, {"negative", p[2]}}}};
}

nlohmann::json terms_json(const std::vector<TermCount>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms) out.push_back({{"term", t.term}, {"count", t.count}});
  return out;
}

}  // namespace

std::string Scope::describe() const {
  switch (kind) {
    case Kind::kGlobal: return "global";
    case Kind::kCountry: return "country:" + value;
    case Kind::kBrand: return "brand:" + value;
    case Kind::kPolarity: return "polarity:" + value;
  }
  return "global";
}

FrequencyTable top_terms(std::span<const Document> docs, std::size_t n, const Scope& scope,
                         std::span<const Polarity> polarities) {
  if (n == 0) throw_usage("top_terms needs n >= 1");
  if (scope.kind == Scope::Kind::kPolarity && polarities.size() != docs.size()) {
    throw_usage("polarity scope needs one polarity per document");
  }
  if (!polarities.empty() && polarities.size() != docs.size()) {
    throw_usage("polarities are not parallel to documents");
  }
  std::unordered_map<std::string, std::size_t> counts;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto pol = polarities.empty() ? std::nullopt : std::optional<Polarity>(polarities[d]);
    if (!in_scope(docs[d], scope, pol)) continue;
    for (const auto& t : docs[d].tokens) ++counts[t];
  }
  return {scope, rank_counts(counts, n)};
}

std::vector<std::pair<std::string, double>> wordcloud_weights(const FrequencyTable& table) {
  std::vector<std::pair<std::string, double>> out;
  if (table.entries.empty()) return out;
  std::size_t max_count = 0;
  for (const auto& e : table.entries) max_count = std::max(max_count, e.count);
  out.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    out.emplace_back(e.term, static_cast<double>(e.count) / static_cast<double>(max_count));
  }
  return out;
}

std::vector<EmotionalWords> emotional_top_words(std::span<const Document> docs,
                                                const sentiment::SentimentLexicon& lex,
                                                std::size_t top) {
  std::vector<EmotionalWords> out;
  for (const auto brand : corpus::kAllBrands) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& doc : docs) {
      if (!doc.brands.contains(brand)) continue;
      for (const auto& t : doc.tokens) {
        if (lex.valences.count(t) != 0) ++counts[t];
      }
    }
    EmotionalWords words;
    words.brand = brand;
    for (auto& tc : rank_counts(counts, top)) {
      const double v = lex.valences.at(tc.term);
      auto& bucket = v > 0 ? words.positive : v < 0 ? words.negative : words.neutral;
      bucket.push_back(std::move(tc));
    }
    out.push_back(std::move(words));
  }
  return out;
}

void PolarityCounts::add(Polarity p) {
  switch (p) {
    case Polarity::kPositive: ++positive; break;
    case Polarity::kNeutral: ++neutral; break;
    case Polarity::kNegative: ++negative; break;
  }
}

std::array<double, 3> PolarityCounts::proportions() const {
  const auto n = total();
  if (n == 0) return {0.0, 0.0, 0.0};
  const double d = static_cast<double>(n);
  return {static_cast<double>(positive) / d, static_cast<double>(neutral) / d,
          static_cast<double>(negative) / d};
}

PolarityCounts DistributionReport::cell(std::string_view country, std::string_view brand) const {
  for (const auto& c : cells) {
    if (c.country == country && c.brand == brand) return c.counts;
  }
  return {};
}

DistributionReport sentiment_distribution(std::span<const corpus::Tweet> tweets,
                                          std::span<const Polarity> polarities) {
  if (tweets.size() != polarities.size()) throw_usage("one polarity per tweet is required");
  // Brand slot: declaration index, untagged last.
  constexpr std::size_t kSlots = std::size(corpus::kAllBrands) + 1;
  std::map<std::string, std::array<PolarityCounts, kSlots>> grid;
  std::map<std::string, PolarityCounts> totals;
  DistributionReport report;
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    const auto& t = tweets[i];
    const std::string country = t.country ? *t.country : std::string(kUnknownCountry);
    auto& row = grid[country];
    if (t.brands.empty()) {
      row[kSlots - 1].add(polarities[i]);
    } else {
      for (std::size_t b = 0; b < kSlots - 1; ++b) {
        if (t.brands.contains(corpus::kAllBrands[b])) row[b].add(polarities[i]);
      }
    }
    totals[country].add(polarities[i]);
    report.overall.add(polarities[i]);
  }
  for (const auto& [country, row] : grid) {
    for (std::size_t b = 0; b < kSlots; ++b) {
      const std::string brand = b + 1 == kSlots ? std::string(kUntagged)
                                                : std::string(corpus::brand_name(corpus::kAllBrands[b]));
      report.cells.push_back({country, brand, row[b]});
    }
  }
  report.country_totals.assign(totals.begin(), totals.end());
  return report;
}

std::vector<CountryShare> country_shares(std::span<const corpus::Tweet> tweets) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : tweets) ++counts[t.country ? *t.country : std::string(kUnknownCountry)];
  std::vector<CountryShare> out;
  for (const auto& [country, count] : counts) {
    out.push_back({country, count, static_cast<double>(count) / static_cast<double>(tweets.size())});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CountryShare& a, const CountryShare& b) { return a.count > b.count; });
  return out;
}

std::pair<TopicRanking, TopicRanking> topic_popularity(const lda::TopicModel& model,
                                                       std::span<const Polarity> polarities,
                                                       std::size_t top_words) {
  if (polarities.size() != model.num_docs()) {
    throw_usage("topic popularity needs one polarity per modelled document");
  }
  const std::size_t K = model.num_topics();
  std::vector<std::size_t> pos(K, 0), neg(K, 0);
  TopicRanking positive{Polarity::kPositive, 0, {}};
  TopicRanking negative{Polarity::kNegative, 0, {}};
  for (std::size_t d = 0; d < model.num_docs(); ++d) {
    if (polarities[d] == Polarity::kPositive) {
      ++pos[model.dominant_topic(d)];
      ++positive.total;
    } else if (polarities[d] == Polarity::kNegative) {
      ++neg[model.dominant_topic(d)];
      ++negative.total;
    }
  }
  const auto fill = [&](TopicRanking& r, const std::vector<std::size_t>& counts) {
    for (std::size_t k = 0; k < K; ++k) r.ranked.push_back({k, counts[k], lda::top_words(model, k, top_words)});
    std::stable_sort(r.ranked.begin(), r.ranked.end(),
                     [](const TopicCount& a, const TopicCount& b) { return a.count > b.count; });
  };
  fill(positive, pos);
  fill(negative, neg);
  return {std::move(positive), std::move(negative)};
}

nlohmann::json to_json(const FrequencyTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [term, weight] : wordcloud_weights(t)) {
    entries.push_back({{"term", term}, {"weight", weight}});
  }
  for (std::size_t i = 0; i < t.entries.size(); ++i) entries[i]["count"] = t.entries[i].count;
  return {{"scope", t.scope.describe()}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const std::vector<EmotionalWords>& words) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : words) {
    out.push_back({{"brand", corpus::brand_name(w.brand)},
                   {"positive", terms_json(w.positive)},
                   {"negative", terms_json(w.negative)},
                   {"neutral", terms_json(w.neutral)}});
  }
  return out;
}

nlohmann::json to_json(const DistributionReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) {
    auto j = counts_json(c.counts);
    j["country"] = c.country;
    j["brand"] = c.brand;
    cells.push_back(std::move(j));
  }
  nlohmann::json countries = nlohmann::json::array();
  for (const auto& [country, counts] : r.country_totals) {
    auto j = counts_json(counts);
    j["country"] = country;
    countries.push_back(std::move(j));
  }
  return {{"cells", std::move(cells)}, {"countries", std::move(countries)},
          {"overall", counts_json(r.overall)}};
}

nlohmann::json to_json(const TopicRanking& r, std::size_t limit) {
  nlohmann::json ranked = nlohmann::json::array();
  for (std::size_t i = 0; i < std::min(limit, r.ranked.size()); ++i) {
    const auto& t = r.ranked[i];
    ranked.push_back({{"rank", i + 1}, {"topic", t.topic}, {"count", t.count}, {"words", t.words}});
  }
  return {{"polarity", sentiment::to_string(r.polarity)},
          {"total", r.total},
          {"topics", std::move(ranked)}};
}

nlohmann::json to_json(const std::vector<CountryShare>& shares) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : shares) {
    out.push_back({{"country", s.country}, {"count", s.count}, {"share", s.share}});
  }
  return out;
}

std::string distribution_csv(const DistributionReport& r) {
  std::string out = "country,brand,positive,neutral,negative,total,p_positive,p_neutral,p_negative\n";
  for (const auto& c : r.cells) {
    const auto p = c.counts.proportions();
    out += csv_field(c.country) + ',' + csv_field(c.brand) + ',' + std::to_string(c.counts.positive) +
           ',' + std::to_string(c.counts.neutral) + ',' + std::to_string(c.counts.negative) + ',' +
           std::to_string(c.counts.total()) + ',' + fixed6(p[0]) + ',' + fixed6(p[1]) + ',' +
           fixed6(p[2]) + '\n';
  }
  return out;
}

std::string frequency_csv(const FrequencyTable& t) {
  std::string out = "rank,term,count,weight\n";
  const auto weights = wordcloud_weights(t);
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    out += std::to_string(i + 1) + ',' + csv_field(t.entries[i].term) + ',' +
           std::to_string(t.entries[i].count) + ',' + fixed6(weights[i].second) + '\n';
  }
  return out;
}

std::string distribution_svg(const DistributionReport& r) {
  constexpr double kLabelWidth = 260.0;
  constexpr double kBarWidth = 400.0;
  constexpr double kRowHeight = 20.0;
  constexpr double kBarHeight = 14.0;
  std::vector<const SentimentDistribution*> rows;
  for (const auto& c : r.cells) {
    if (c.counts.total() > 0) rows.push_back(&c);
  }
  const double height = kRowHeight * static_cast<double>(rows.size() + 1);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    fixed6(kLabelWidth + kBarWidth + 60.0) + "\" height=\"" + fixed6(height) + "\">\n";
  static constexpr std::array<const char*, 3> kClasses = {"positive", "neutral", "negative"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = *rows[i];
    const double y = kRowHeight * static_cast<double>(i);
    out += "<text x=\"0\" y=\"" + fixed6(y + kBarHeight - 2.0) + "\">" +
           xml_escape(c.country + " / " + c.brand) + "</text>\n";
    const auto p = c.counts.proportions();
    double x = kLabelWidth;
    for (std::size_t s = 0; s < 3; ++s) {
      const double w = p[s] * kBarWidth;
      out += "<rect class=\"" + std::string(kClasses[s]) + "\" x=\"" + fixed6(x) + "\" y=\"" + fixed6(y) +
             "\" width=\"" + fixed6(w) + "\" height=\"" + fixed6(kBarHeight) + "\"/>\n";
      x += w;
    }
    out += "<text x=\"" + fixed6(kLabelWidth + kBarWidth + 4.0) + "\" y=\"" + fixed6(y + kBarHeight - 2.0) +
           "\">" + std::to_string(c.counts.total()) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sentopic::analytics
