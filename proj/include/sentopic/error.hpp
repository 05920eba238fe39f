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

#include <stdexcept>
#include <string>

namespace sentopic {

// Failure classes. The C API maps each onto a status code, and the CLI maps
// those onto process exit codes.
enum class ErrorKind {
  kInternal,
  kUsage,       // bad argument, bad config, failed precondition
  kDependency,  // an upstream pipeline artifact is missing
  kData,        // malformed input data
  kIo,          // file could not be opened, read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& what) {
  throw Error(ErrorKind::kUsage, what);
}

[[noreturn]] inline void throw_io(const std::string& what) {
  throw Error(ErrorKind::kIo, what);
}

[[noreturn]] inline void throw_data(const std::string& what) {
  throw Error(ErrorKind::kData, what);
}

}  // namespace sentopic
