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

#include "sentopic/csv.hpp"

namespace sentopic {

int CsvReader::get() {
  const int c = in_.get();
  if (c == '\n') ++line_;
  return c;
}

int CsvReader::peek() { return in_.peek(); }

CsvReader::Status CsvReader::next(std::vector<std::string>& fields) {
  fields.clear();
  if (peek() == std::char_traits<char>::eof()) return Status::kEnd;
  record_line_ = line_;

  enum class State { kStart, kUnquoted, kQuoted, kAfterQuote };
  State state = State::kStart;
  bool malformed = false;
  std::string field;

  const auto finish = [&]() {
    fields.push_back(std::move(field));
    return malformed ? Status::kMalformed : Status::kRecord;
  };
  // Consumes "\n" or "\r\n"; a lone '\r' is ordinary data.
  const auto at_newline = [&](int c) {
    if (c == '\n') return true;
    if (c == '\r' && peek() == '\n') {
      get();
      return true;
    }
    return false;
  };

  for (;;) {
    const int c = get();
    if (c == std::char_traits<char>::eof()) {
      if (state == State::kQuoted) malformed = true;
      return finish();
    }
    const char ch = static_cast<char>(c);
    switch (state) {
      case State::kStart:
        if (ch == '"') {
          state = State::kQuoted;
        } else if (ch == delimiter_) {
          fields.emplace_back();
        } else if (at_newline(c)) {
          return finish();
        } else {
          field += ch;
          state = State::kUnquoted;
        }
        break;
      case State::kUnquoted:
        if (ch == delimiter_) {
          fields.push_back(std::move(field));
          field.clear();
          state = State::kStart;
        } else if (at_newline(c)) {
          return finish();
        } else {
          if (ch == '"') malformed = true;
          field += ch;
        }
        break;
      case State::kQuoted:
        if (ch == '"') {
          if (peek() == '"') {
            get();
            field += '"';
          } else {
            state = State::kAfterQuote;
          }
        } else {
          field += ch;
        }
        break;
      case State::kAfterQuote:
        if (ch == delimiter_) {
          fields.push_back(std::move(field));
          field.clear();
          state = State::kStart;
        } else if (at_newline(c)) {
          return finish();
        } else {
          malformed = true;
          field += ch;
          state = State::kUnquoted;
        }
        break;
    }
  }
}

}  // namespace sentopic
