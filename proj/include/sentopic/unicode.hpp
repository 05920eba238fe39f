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
#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers over ICU character properties.
namespace sentopic::unicode {

// One decoded code point and the byte range it occupies in the source.
struct CodePoint {
  char32_t value;
  std::size_t offset;
  std::size_t length;
};

// Decodes UTF-8. Ill-formed sequences decode to U+FFFD, one per bad byte.
std::vector<CodePoint> decode(std::string_view text);

void append_utf8(std::string& out, char32_t cp);

// Whitespace as Python's str.split() sees it: bidi class WS/B/S or
// general category Zs.
bool is_space(char32_t cp);

// Emoji pictographs, presentation selectors, skin-tone modifiers, ZWJ,
// regional indicators and keycap marks. ASCII is never an emoji here even
// though '#', '*' and digits carry the Emoji property.
bool is_emoji(char32_t cp);

bool is_alnum(char32_t cp);
bool is_lower(char32_t cp);
bool is_upper(char32_t cp);
bool is_title(char32_t cp);

// Simple (1:1) case mapping applied per code point.
std::string to_lower(std::string_view text);

// Python str.isupper(): at least one cased character and none lowercase or
// titlecase.
bool is_all_caps(std::string_view text);

std::size_t length(std::string_view text);

// Splits on is_space() runs; no empty fields.
std::vector<std::string> split_whitespace(std::string_view text);

// Trims is_space() from both ends.
std::string_view trim(std::string_view text);

}  // namespace sentopic::unicode
