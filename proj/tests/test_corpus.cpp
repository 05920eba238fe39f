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

#include <gtest/gtest.h>

#include "sentopic/error.hpp"
#include "sentopic/tsv.hpp"
#include "sentopic/unicode.hpp"
#include "test_util.hpp"

namespace sentopic::corpus {
namespace {

using sentopic::testing::data;
using sentopic::testing::resource;

std::shared_ptr<const Gazetteer> gazetteer() {
  static const auto g = std::make_shared<const Gazetteer>(Gazetteer::load(resource("gazetteer.tsv")));
  return g;
}

std::shared_ptr<const BrandTable> brands() {
  static const auto b = std::make_shared<const BrandTable>(BrandTable::load(resource("brands.tsv")));
  return b;
}

BrandSet set_of(std::initializer_list<Brand> bs) {
  BrandSet s;
  for (const auto b : bs) s.insert(b);
  return s;
}

TEST(ResolveCountry, Examples) {
  EXPECT_EQ(resolve_country("New Delhi, India", *gazetteer()), "IN");
  EXPECT_EQ(resolve_country("", *gazetteer()), std::nullopt);
  EXPECT_EQ(resolve_country("Newcastle upon Tyne, England", *gazetteer()), "GB");
  EXPECT_EQ(resolve_country("somewhere over the rainbow", *gazetteer()), std::nullopt);
}

TEST(ResolveCountry, CaseInsensitiveAndIdempotent) {
  for (const char* loc : {"New Delhi, India", "LONDON, ENGLAND", "toronto", "Lagos, Nigeria"}) {
    const auto a = resolve_country(loc, *gazetteer());
    ASSERT_TRUE(a.has_value()) << loc;
    EXPECT_EQ(resolve_country(unicode::to_lower(loc), *gazetteer()), a);
    EXPECT_EQ(resolve_country(loc, *gazetteer()), a);
  }
}

TEST(ResolveCountry, LongestAliasWinsOnWordBoundaries) {
  const Gazetteer gaz({{"york", "GB"}, {"new york", "US"}, {"us", "US"}, {"ab", "XA"}, {"aa", "XB"}});
  EXPECT_EQ(resolve_country("New York City", gaz), "US");
  EXPECT_EQ(resolve_country("York", gaz), "GB");
  EXPECT_EQ(resolve_country("Brussels", gaz), std::nullopt);
  // Equal-length matches go to the lexicographically smallest alias.
  EXPECT_EQ(resolve_country("ab aa", gaz), "XB");
}

TEST(TagBrands, Examples) {
  EXPECT_EQ(tag_brands("got my pfizer jab today", *brands()), set_of({Brand::kPfizerBioNTech}));
  EXPECT_EQ(tag_brands("covaxin and sputnik both available", *brands()),
            set_of({Brand::kCovaxin, Brand::kSputnikV}));
  EXPECT_TRUE(tag_brands("vaccines are great", *brands()).empty());
  EXPECT_EQ(tag_brands("MODERNA!!", *brands()), set_of({Brand::kModerna}));
  EXPECT_TRUE(tag_brands("modernapost", *brands()).empty());
}

TEST(Brands, NamesRoundTrip) {
  for (const auto b : kAllBrands) EXPECT_EQ(brand_from_name(brand_name(b)), b);
  EXPECT_EQ(brand_from_name("Novavax"), std::nullopt);
  for (const auto b : kAllBrands) EXPECT_FALSE(brands()->aliases_of(b).empty());
}

TEST(BrandTable, RejectsSharedAlias) {
  std::vector<std::pair<std::string, Brand>> aliases;
  for (const auto b : kAllBrands) aliases.emplace_back(std::string(brand_name(b)), b);
  aliases.emplace_back("jab", Brand::kModerna);
  aliases.emplace_back("jab", Brand::kCovaxin);
  EXPECT_THROW(BrandTable{aliases}, Error);
}

TEST(Timestamp, AcceptedForms) {
  const auto base = parse_timestamp("2021-03-04 13:20:00");
  ASSERT_TRUE(base);
  EXPECT_EQ(format_timestamp(*base), "2021-03-04T13:20:00Z");
  for (const char* s : {"2021-03-04T13:20:00", "2021-03-04 13:20:00.500", "2021-03-04T13:20:00Z",
                        "2021-03-04 13:20:00+00:00"}) {
    EXPECT_EQ(parse_timestamp(s), base) << s;
  }
  EXPECT_EQ(format_timestamp(*parse_timestamp("2021-03-04")), "2021-03-04T00:00:00Z");
  for (const char* s : {"yesterday", "2021-13-01", "2021-02-30", "2021-03-04 25:00:00", ""}) {
    EXPECT_EQ(parse_timestamp(s), std::nullopt) << s;
  }
}

TEST(Ingest, TenRowFixtureKeepsSeven) {
  const auto r = ingest_csv(data("ten_rows.csv"), {}, gazetteer(), brands());
  EXPECT_EQ(r.stats.total_rows, 10u);
  EXPECT_EQ(r.stats.dropped_empty_location, 3u);
  ASSERT_EQ(r.tweets.size(), 7u);
  std::vector<std::string> ids;
  for (const auto& t : r.tweets) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"1", "3", "5", "6", "8", "9", "10"}));
  EXPECT_EQ(r.tweets[0].country, "IN");
  EXPECT_EQ(r.tweets[0].brands, set_of({Brand::kPfizerBioNTech}));
  EXPECT_EQ(r.tweets[2].text, "Side effects: sore arm, \"mild\" fever");
  EXPECT_EQ(r.tweets[4].text, "Line one\nline two of a multi-line tweet");
  EXPECT_EQ(format_timestamp(r.tweets[4].created_at), "2021-03-04T13:20:00Z");
}

TEST(Ingest, DropArithmeticOnLargeFixture) {
  const auto r = ingest_csv(data("tweets_200.csv"), {}, gazetteer(), brands());
  const auto& s = r.stats;
  EXPECT_EQ(s.total_rows, 200u);
  EXPECT_EQ(s.emitted, r.tweets.size());
  EXPECT_EQ(s.emitted + s.dropped(), s.total_rows);
  EXPECT_EQ(s.dropped_empty_location, 20u);
  EXPECT_EQ(s.dropped_unresolved_location, 8u);
  EXPECT_EQ(s.dropped_malformed, 4u);
  EXPECT_EQ(s.dropped_duplicate, 3u);
  EXPECT_EQ(s.emitted, 165u);
  for (const auto& t : r.tweets) EXPECT_TRUE(t.country.has_value());
}

TEST(Ingest, DeterministicAndStreaming) {
  const auto a = ingest_csv(data("tweets_200.csv"), {}, gazetteer(), brands());
  TweetReader reader(data("tweets_200.csv"), {}, gazetteer(), brands());
  std::size_t i = 0;
  while (auto t = reader.next()) {
    ASSERT_LT(i, a.tweets.size());
    EXPECT_EQ(t->id, a.tweets[i].id);
    EXPECT_EQ(t->text, a.tweets[i].text);
    EXPECT_EQ(t->country, a.tweets[i].country);
    ++i;
  }
  EXPECT_EQ(i, a.tweets.size());
  EXPECT_EQ(reader.stats().dropped(), a.stats.dropped());
}

TEST(Ingest, UnresolvedKeptWhenCountryNotRequired) {
  IngestOptions opts;
  opts.require_country = false;
  const auto r = ingest_csv(data("tweets_200.csv"), opts, gazetteer(), brands());
  EXPECT_EQ(r.stats.dropped_unresolved_location, 0u);
  EXPECT_EQ(r.tweets.size(), 173u);
}

TEST(Ingest, Errors) {
  try {
    ingest_csv("/nonexistent/tweets.csv", {}, gazetteer(), brands());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
  IngestOptions opts;
  opts.columns.location = "place";
  try {
    ingest_csv(data("ten_rows.csv"), opts, gazetteer(), brands());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
}

TEST(Ingest, HeaderOnlyFileIsEmpty) {
  sentopic::testing::TempDir dir;
  const auto p = dir.path() / "empty.csv";
  write_file(p, "id,user_location,date,text\n");
  const auto r = ingest_csv(p, {}, gazetteer(), brands());
  EXPECT_TRUE(r.tweets.empty());
  EXPECT_EQ(r.stats.total_rows, 0u);
}

}  // namespace
}  // namespace sentopic::corpus
