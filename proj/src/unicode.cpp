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

#include "sentopic/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace sentopic::unicode {

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto n = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < n) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, n, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({static_cast<char32_t>(c), static_cast<std::size_t>(start),
                   static_cast<std::size_t>(i - start)});
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    out += "\xEF\xBF\xBD";
    return;
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

bool is_space(char32_t cp) {
  if (cp < 0x80) {
    return cp == ' ' || (cp >= 0x09 && cp <= 0x0D) || (cp >= 0x1C && cp <= 0x1F);
  }
  const auto c = static_cast<UChar32>(cp);
  if (u_charType(c) == U_SPACE_SEPARATOR) return true;
  switch (u_charDirection(c)) {
    case U_WHITE_SPACE_NEUTRAL:
    case U_BLOCK_SEPARATOR:
    case U_SEGMENT_SEPARATOR:
      return true;
    default:
      return false;
  }
}

bool is_emoji(char32_t cp) {
  if (cp < 0x80) return false;
  const auto c = static_cast<UChar32>(cp);
  return u_hasBinaryProperty(c, UCHAR_EMOJI) ||
         u_hasBinaryProperty(c, UCHAR_EXTENDED_PICTOGRAPHIC) ||
         u_hasBinaryProperty(c, UCHAR_EMOJI_COMPONENT);
}

bool is_alnum(char32_t cp) { return u_isalnum(static_cast<UChar32>(cp)); }
bool is_lower(char32_t cp) { return u_isULowercase(static_cast<UChar32>(cp)); }
bool is_upper(char32_t cp) { return u_isUUppercase(static_cast<UChar32>(cp)); }
bool is_title(char32_t cp) { return u_istitle(static_cast<UChar32>(cp)); }

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char ch : text) {
    if (static_cast<unsigned char>(ch) >= 0x80) {
      out.clear();
      for (const auto& cp : decode(text)) {
        append_utf8(out, static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp.value))));
      }
      return out;
    }
    out.push_back(ch >= 'A' && ch <= 'Z' ? static_cast<char>(ch - 'A' + 'a') : ch);
  }
  return out;
}

bool is_all_caps(std::string_view text) {
  bool cased = false;
  for (const auto& cp : decode(text)) {
    if (is_lower(cp.value) || is_title(cp.value)) return false;
    if (is_upper(cp.value)) cased = true;
  }
  return cased;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (const char ch : text) {
    // count every byte that is not a continuation byte
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = std::string_view::npos;
  for (const auto& cp : decode(text)) {
    if (is_space(cp.value)) {
      if (start != std::string_view::npos) {
        out.emplace_back(text.substr(start, cp.offset - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = cp.offset;
    }
  }
  if (start != std::string_view::npos) out.emplace_back(text.substr(start));
  return out;
}

std::string_view trim(std::string_view text) {
  const auto cps = decode(text);
  std::size_t first = 0;
  while (first < cps.size() && is_space(cps[first].value)) ++first;
  if (first == cps.size()) return {};
  std::size_t last = cps.size();
  while (last > first && is_space(cps[last - 1].value)) --last;
  const std::size_t begin = cps[first].offset;
  const std::size_t end = cps[last - 1].offset + cps[last - 1].length;
  return text.substr(begin, end - begin);
}

}  // namespace sentopic::unicode
