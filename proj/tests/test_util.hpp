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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sentopic/preprocess.hpp"
#include "sentopic/sentiment.hpp"

namespace sentopic::testing {

inline std::filesystem::path resource(const std::string& name) {
  return std::filesystem::path(SENTOPIC_RESOURCE_DIR) / name;
}

inline std::filesystem::path data(const std::string& name) {
  return std::filesystem::path(SENTOPIC_TEST_DATA) / name;
}

inline const sentiment::SentimentLexicon& lexicon() {
  static const auto lex =
      sentiment::SentimentLexicon::load(resource("vader_lexicon.tsv"), resource("emoji_map.tsv"));
  return lex;
}

inline const preprocess::Lexicons& preprocess_lexicons() {
  static const auto lex = preprocess::Lexicons::load(
      {{resource("stopwords.txt"), resource("meaningless.txt")},
       resource("lemmas.tsv"),
       resource("english_words.tsv")});
  return lex;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("sentopic_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace sentopic::testing
