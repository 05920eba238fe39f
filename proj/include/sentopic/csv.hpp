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

#include <istream>
#include <string>
#include <vector>

namespace sentopic {

// Streaming RFC 4180 reader. Quoted fields may span lines and escape quotes
// by doubling them. Both "\n" and "\r\n" terminate records.
class CsvReader {
 public:
  enum class Status { kRecord, kMalformed, kEnd };

  explicit CsvReader(std::istream& in, char delimiter = ',')
      : in_(in), delimiter_(delimiter) {}

  // Reads the next record into `fields`. kMalformed means the record was
  // consumed but broke quoting rules (stray quote inside an unquoted field,
  // text after a closing quote, or a quote left open at end of input);
  // reading can continue with the next record.
  Status next(std::vector<std::string>& fields);

  // 1-based physical line on which the last returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  int get();
  int peek();

  std::istream& in_;
  char delimiter_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

}  // namespace sentopic
