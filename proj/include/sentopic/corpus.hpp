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

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sentopic/csv.hpp"

// Raw tweet ingestion: CSV reading, location-to-country resolution, vaccine
// brand tagging and the record-level filters.
namespace sentopic::corpus {

enum class Brand : std::uint8_t {
  kPfizerBioNTech,
  kSinopharm,
  kSinovac,
  kOxfordAstraZeneca,
  kModerna,
  kCovaxin,
  kSputnikV,
};

inline constexpr std::size_t kBrandCount = 7;
inline constexpr std::array<Brand, kBrandCount> kAllBrands = {
    Brand::kPfizerBioNTech, Brand::kSinopharm, Brand::kSinovac,
    Brand::kOxfordAstraZeneca, Brand::kModerna, Brand::kCovaxin, Brand::kSputnikV};

std::string_view brand_name(Brand b);
std::optional<Brand> brand_from_name(std::string_view name);

// Subset of the seven brands, iterated in enum order.
class BrandSet {
 public:
  BrandSet() = default;

  void insert(Brand b) { bits_ |= bit(b); }
  bool contains(Brand b) const { return (bits_ & bit(b)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<Brand> to_vector() const;

  friend bool operator==(BrandSet, BrandSet) = default;

 private:
  static std::uint8_t bit(Brand b) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(b)); }
  std::uint8_t bits_ = 0;
};

// Case-insensitive alias search honoring word boundaries: an alias edge that
// is alphanumeric must not touch another alphanumeric character.
class AliasMatcher {
 public:
  AliasMatcher() = default;
  explicit AliasMatcher(std::vector<std::string> lowercase_aliases);

  // Calls `fn(alias_index)` for every alias occurring in `lowercase_text`,
  // once per occurrence.
  void for_each_match(std::string_view lowercase_text,
                      const std::function<void(std::size_t)>& fn) const;

  const std::vector<std::string>& aliases() const { return aliases_; }

 private:
  std::vector<std::string> aliases_;
  std::array<std::vector<std::uint32_t>, 256> by_first_byte_{};
};

class Gazetteer {
 public:
  // Aliases are lowercased; a later duplicate alias overrides an earlier one.
  explicit Gazetteer(std::vector<std::pair<std::string, std::string>> alias_to_code);
  static Gazetteer load(const std::filesystem::path& tsv);

  std::size_t size() const { return codes_.size(); }
  const AliasMatcher& matcher() const { return matcher_; }
  const std::string& code(std::size_t alias_index) const { return codes_[alias_index]; }

 private:
  AliasMatcher matcher_;
  std::vector<std::string> codes_;  // parallel to matcher_.aliases()
};

class BrandTable {
 public:
  // Throws Error(kData) unless every brand has at least one alias and no
  // alias is shared between brands.
  explicit BrandTable(std::vector<std::pair<std::string, Brand>> aliases);
  static BrandTable load(const std::filesystem::path& tsv);

  const AliasMatcher& matcher() const { return matcher_; }
  Brand brand(std::size_t alias_index) const { return brands_[alias_index]; }
  std::vector<std::string> aliases_of(Brand b) const;

 private:
  AliasMatcher matcher_;
  std::vector<Brand> brands_;
};

// Longest alias contained in the location on word boundaries; ties go to
// the lexicographically smallest alias.
std::optional<std::string> resolve_country(std::string_view location_raw, const Gazetteer& gaz);

BrandSet tag_brands(std::string_view text, const BrandTable& brands);

using Timestamp = std::chrono::sys_seconds;

// Accepts "YYYY-MM-DD", "YYYY-MM-DD HH:MM:SS" and "YYYY-MM-DDTHH:MM:SS",
// with optional fractional seconds and a trailing "Z" or "+00:00".
std::optional<Timestamp> parse_timestamp(std::string_view s);
std::string format_timestamp(Timestamp t);  // "YYYY-MM-DDTHH:MM:SSZ"

struct Tweet {
  std::string id;
  std::string text;
  std::string location_raw;
  Timestamp created_at{};
  std::optional<std::string> country;
  BrandSet brands;
};

struct ColumnMap {
  std::string id = "id";
  std::string text = "text";
  std::string location = "user_location";
  std::string date = "date";
  char delimiter = ',';
};

struct IngestStats {
  std::size_t total_rows = 0;
  std::size_t emitted = 0;
  std::size_t dropped_empty_location = 0;
  std::size_t dropped_unresolved_location = 0;
  std::size_t dropped_malformed = 0;
  std::size_t dropped_duplicate = 0;

  std::size_t dropped_location() const {
    return dropped_empty_location + dropped_unresolved_location;
  }
  std::size_t dropped() const {
    return dropped_location() + dropped_malformed + dropped_duplicate;
  }
};

struct IngestOptions {
  ColumnMap columns;
  // Drop tweets whose non-empty location matches no gazetteer alias.
  bool require_country = true;
};

// Sequential, order-preserving tweet stream over a CSV file.
class TweetReader {
 public:
  // Throws Error(kIo) for a missing file and Error(kUsage) when the header
  // lacks a configured column.
  TweetReader(const std::filesystem::path& path, IngestOptions options,
              std::shared_ptr<const Gazetteer> gazetteer,
              std::shared_ptr<const BrandTable> brands);

  // Next surviving tweet, or nullopt at end of input. Malformed rows are
  // skipped and counted, never thrown.
  std::optional<Tweet> next();

  const IngestStats& stats() const { return stats_; }

 private:
  std::ifstream in_;
  CsvReader csv_;
  IngestOptions options_;
  std::shared_ptr<const Gazetteer> gazetteer_;
  std::shared_ptr<const BrandTable> brands_;
  std::size_t header_size_ = 0;
  std::size_t col_id_ = 0, col_text_ = 0, col_location_ = 0, col_date_ = 0;
  std::unordered_set<std::string> seen_ids_;
  std::vector<std::string> fields_;
  IngestStats stats_;
};

struct IngestResult {
  std::vector<Tweet> tweets;
  IngestStats stats;
};

IngestResult ingest_csv(const std::filesystem::path& path, const IngestOptions& options,
                        std::shared_ptr<const Gazetteer> gazetteer,
                        std::shared_ptr<const BrandTable> brands);

}  // namespace sentopic::corpus
