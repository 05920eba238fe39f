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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sentopic {

// Reads a UTF-8 resource file of `key<TAB>value` lines. Blank lines and lines
// that start with '#' and carry no TAB are comments (emoticon keys may start
// with '#'). Extra columns after the second are ignored. A non-comment line
// without a TAB throws Error(kData); a missing file throws Error(kIo).
std::vector<std::pair<std::string, std::string>> read_tsv_pairs(
    const std::filesystem::path& path);

// Reads one entry per line, same comment rule, entries trimmed.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace sentopic
