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

#include "sentopic/tsv.hpp"

#include <fstream>
#include <sstream>

#include "sentopic/error.hpp"
#include "sentopic/unicode.hpp"

namespace sentopic {

namespace {

bool is_comment(const std::string& line) {
  return line.empty() || (line[0] == '#' && line.find('\t') == std::string::npos);
}

std::vector<std::string> lines_of(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_tsv_pairs(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t lineno = 0;
  for (auto& line : lines_of(path)) {
    ++lineno;
    if (is_comment(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw_data(path.string() + ":" + std::to_string(lineno) + ": expected key<TAB>value");
    }
    const auto next = line.find('\t', tab + 1);
    std::string key(unicode::trim(std::string_view(line).substr(0, tab)));
    std::string value(unicode::trim(std::string_view(line).substr(
        tab + 1, next == std::string::npos ? std::string::npos : next - tab - 1)));
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::vector<std::string> out;
  for (auto& line : lines_of(path)) {
    if (is_comment(line)) continue;
    auto word = unicode::trim(line);
    if (!word.empty()) out.emplace_back(word);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_io("cannot write " + path.string());
  out << contents;
  if (!out) throw_io("write failed for " + path.string());
}

}  // namespace sentopic
