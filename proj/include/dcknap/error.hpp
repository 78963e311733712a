// Copyright 2026 The dcknap Authors
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
#include <optional>
#include <stdexcept>
#include <string>

namespace dcknap {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidInput,
  kInfeasible,
  kInvalidPartition,
  kSplitInfeasible,
  kSizeLimit,
  kOutOfRange,
  kConfig,
  kIo,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// (the CLI in particular) map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when total capacity cannot cover the demand.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::int64_t deficit, const std::string& context = {});

  std::int64_t deficit() const noexcept { return deficit_; }

 private:
  std::int64_t deficit_;
};

// Raised by the tree generators when a split yields an infeasible child.
class SplitInfeasibleError : public Error {
 public:
  SplitInfeasibleError(std::size_t node_index, const std::string& message)
      : Error(ErrorKind::kSplitInfeasible, message), node_index_(node_index) {}

  std::size_t node_index() const noexcept { return node_index_; }

 private:
  std::size_t node_index_;
};

}  // namespace dcknap
