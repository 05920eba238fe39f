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

#include "sentopic/corpus.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "sentopic/error.hpp"
#include "sentopic/tsv.hpp"
#include "sentopic/unicode.hpp"

namespace sentopic::corpus {

namespace {

constexpr std::array<std::string_view, kBrandCount> kBrandNames = {
    "Pfizer/BioNTech", "Sinopharm", "Sinovac", "Oxford/AstraZeneca",
    "Moderna", "Covaxin", "Sputnik V"};

bool alnum_before(std::string_view text, std::size_t pos) {
  if (pos == 0) return false;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_PREV(s, 0, i, c);
  return c >= 0 && unicode::is_alnum(static_cast<char32_t>(c));
}

bool alnum_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return false;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(s, i, static_cast<int32_t>(text.size()), c);
  return c >= 0 && unicode::is_alnum(static_cast<char32_t>(c));
}

bool edge_is_alnum(std::string_view alias, bool front) {
  if (alias.empty()) return false;
  return front ? alnum_at(alias, 0) : alnum_before(alias, alias.size());
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw_usage("schema error: CSV header has no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

template <typename T>
bool parse_int(std::string_view s, T& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::string_view brand_name(Brand b) { return kBrandNames[static_cast<std::size_t>(b)]; }

std::optional<Brand> brand_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBrandCount; ++i) {
    if (kBrandNames[i] == name) return kAllBrands[i];
  }
  return std::nullopt;
}

std::size_t BrandSet::size() const {
  std::size_t n = 0;
  for (const auto b : kAllBrands) n += contains(b) ? 1 : 0;
  return n;
}

std::vector<Brand> BrandSet::to_vector() const {
  std::vector<Brand> out;
  for (const auto b : kAllBrands) {
    if (contains(b)) out.push_back(b);
  }
  return out;
}

AliasMatcher::AliasMatcher(std::vector<std::string> lowercase_aliases)
    : aliases_(std::move(lowercase_aliases)) {
  for (std::size_t i = 0; i < aliases_.size(); ++i) {
    if (aliases_[i].empty()) throw_data("empty alias");
    by_first_byte_[static_cast<unsigned char>(aliases_[i][0])].push_back(
        static_cast<std::uint32_t>(i));
  }
}

void AliasMatcher::for_each_match(std::string_view text,
                                  const std::function<void(std::size_t)>& fn) const {
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const auto& bucket = by_first_byte_[static_cast<unsigned char>(text[pos])];
    for (const auto idx : bucket) {
      const std::string& alias = aliases_[idx];
      if (text.compare(pos, alias.size(), alias) != 0) continue;
      if (edge_is_alnum(alias, true) && alnum_before(text, pos)) continue;
      if (edge_is_alnum(alias, false) && alnum_at(text, pos + alias.size())) continue;
      fn(idx);
    }
  }
}

Gazetteer::Gazetteer(std::vector<std::pair<std::string, std::string>> alias_to_code) {
  std::map<std::string, std::string> entries;
  for (auto& [alias, code] : alias_to_code) {
    auto key = unicode::to_lower(unicode::trim(alias));
    if (key.empty()) continue;
    entries.insert_or_assign(std::move(key), std::move(code));
  }
  std::vector<std::string> aliases;
  for (auto& [alias, code] : entries) {
    aliases.push_back(alias);
    codes_.push_back(code);
  }
  matcher_ = AliasMatcher(std::move(aliases));
}

Gazetteer Gazetteer::load(const std::filesystem::path& tsv) { return Gazetteer(read_tsv_pairs(tsv)); }

BrandTable::BrandTable(std::vector<std::pair<std::string, Brand>> aliases) {
  std::map<std::string, Brand> entries;
  for (auto& [alias, brand] : aliases) {
    auto key = unicode::to_lower(unicode::trim(alias));
    if (key.empty()) throw_data("empty brand alias");
    const auto [it, inserted] = entries.emplace(key, brand);
    if (!inserted && it->second != brand) {
      throw_data("brand alias '" + key + "' is shared by " + std::string(brand_name(it->second)) +
                 " and " + std::string(brand_name(brand)));
    }
  }
  std::array<bool, kBrandCount> covered{};
  std::vector<std::string> keys;
  for (auto& [alias, brand] : entries) {
    keys.push_back(alias);
    brands_.push_back(brand);
    covered[static_cast<std::size_t>(brand)] = true;
  }
  for (std::size_t i = 0; i < kBrandCount; ++i) {
    if (!covered[i]) throw_data("brand " + std::string(kBrandNames[i]) + " has no alias");
  }
  matcher_ = AliasMatcher(std::move(keys));
}

BrandTable BrandTable::load(const std::filesystem::path& tsv) {
  std::vector<std::pair<std::string, Brand>> aliases;
  for (auto& [alias, name] : read_tsv_pairs(tsv)) {
    const auto brand = brand_from_name(name);
    if (!brand) throw_data(tsv.string() + ": unknown brand '" + name + "'");
    aliases.emplace_back(std::move(alias), *brand);
  }
  return BrandTable(std::move(aliases));
}

std::vector<std::string> BrandTable::aliases_of(Brand b) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < brands_.size(); ++i) {
    if (brands_[i] == b) out.push_back(matcher_.aliases()[i]);
  }
  return out;
}

std::optional<std::string> resolve_country(std::string_view location_raw, const Gazetteer& gaz) {
  if (location_raw.empty()) return std::nullopt;
  const std::string lower = unicode::to_lower(location_raw);
  const auto& aliases = gaz.matcher().aliases();
  std::optional<std::size_t> best;
  std::size_t best_len = 0;
  gaz.matcher().for_each_match(lower, [&](std::size_t idx) {
    const std::size_t len = unicode::length(aliases[idx]);
    if (!best || len > best_len || (len == best_len && aliases[idx] < aliases[*best])) {
      best = idx;
      best_len = len;
    }
  });
  if (!best) return std::nullopt;
  return gaz.code(*best);
}

BrandSet tag_brands(std::string_view text, const BrandTable& brands) {
  BrandSet out;
  const std::string lower = unicode::to_lower(text);
  brands.matcher().for_each_match(lower, [&](std::size_t idx) { out.insert(brands.brand(idx)); });
  return out;
}

std::optional<Timestamp> parse_timestamp(std::string_view s) {
  s = unicode::trim(s);
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  int y = 0;
  unsigned mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), mo) ||
      !parse_int(s.substr(8, 2), d)) {
    return std::nullopt;
  }
  std::string_view rest = s.substr(10);
  if (!rest.empty()) {
    if ((rest[0] != ' ' && rest[0] != 'T') || rest.size() < 9 || rest[3] != ':' ||
        rest[6] != ':') {
      return std::nullopt;
    }
    if (!parse_int(rest.substr(1, 2), h) || !parse_int(rest.substr(4, 2), mi) ||
        !parse_int(rest.substr(7, 2), sec)) {
      return std::nullopt;
    }
    rest = rest.substr(9);
    if (!rest.empty() && rest[0] == '.') {
      std::size_t i = 1;
      while (i < rest.size() && rest[i] >= '0' && rest[i] <= '9') ++i;
      if (i == 1) return std::nullopt;
      rest = rest.substr(i);
    }
    if (rest != "" && rest != "Z" && rest != "+00:00" && rest != "+0000") return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo},
                                        std::chrono::day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || sec > 60) return std::nullopt;
  return std::chrono::sys_days{ymd} + std::chrono::hours{h} + std::chrono::minutes{mi} +
         std::chrono::seconds{sec};
}

std::string format_timestamp(Timestamp t) {
  const auto day = std::chrono::floor<std::chrono::days>(t);
  const std::chrono::year_month_day ymd{day};
  const std::chrono::hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

TweetReader::TweetReader(const std::filesystem::path& path, IngestOptions options,
                         std::shared_ptr<const Gazetteer> gazetteer,
                         std::shared_ptr<const BrandTable> brands)
    : in_(path, std::ios::binary),
      csv_(in_, options.columns.delimiter),
      options_(std::move(options)),
      gazetteer_(std::move(gazetteer)),
      brands_(std::move(brands)) {
  if (!in_) throw_io("cannot open input " + path.string());
  std::vector<std::string> header;
  if (csv_.next(header) != CsvReader::Status::kRecord) {
    throw_usage("schema error: " + path.string() + " has no readable header row");
  }
  // Tolerate a UTF-8 byte order mark on the first column name.
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
  header_size_ = header.size();
  col_id_ = column_index(header, options_.columns.id);
  col_text_ = column_index(header, options_.columns.text);
  col_location_ = column_index(header, options_.columns.location);
  col_date_ = column_index(header, options_.columns.date);
}

std::optional<Tweet> TweetReader::next() {
  for (;;) {
    const auto status = csv_.next(fields_);
    if (status == CsvReader::Status::kEnd) return std::nullopt;
    ++stats_.total_rows;
    if (status == CsvReader::Status::kMalformed || fields_.size() != header_size_) {
      ++stats_.dropped_malformed;
      continue;
    }
    const auto id = unicode::trim(fields_[col_id_]);
    const auto text = unicode::trim(fields_[col_text_]);
    const auto created = parse_timestamp(fields_[col_date_]);
    if (id.empty() || text.empty() || !created) {
      ++stats_.dropped_malformed;
      continue;
    }
    const auto location = unicode::trim(fields_[col_location_]);
    if (location.empty()) {
      ++stats_.dropped_empty_location;
      continue;
    }
    auto country = resolve_country(location, *gazetteer_);
    if (!country && options_.require_country) {
      ++stats_.dropped_unresolved_location;
      continue;
    }
    if (!seen_ids_.emplace(id).second) {
      ++stats_.dropped_duplicate;
      continue;
    }
    Tweet tweet;
    tweet.id = std::string(id);
    tweet.text = fields_[col_text_];
    tweet.location_raw = fields_[col_location_];
    tweet.created_at = *created;
    tweet.country = std::move(country);
    tweet.brands = tag_brands(tweet.text, *brands_);
    ++stats_.emitted;
    return tweet;
  }
}

IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& options,
                        std::shared_ptr<const Gazetteer> gazetteer,
                        std::shared_ptr<const BrandTable> brands) {
  TweetReader reader(path, options, std::move(gazetteer), std::move(brands));
  IngestResult result;
  while (auto tweet = reader.next()) result.tweets.push_back(std::move(*tweet));
  result.stats = reader.stats();
  return result;
}

}  // namespace sentopic::corpus
