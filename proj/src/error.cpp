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


#include "dcknap/error.hpp"

namespace dcknap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kInvalidPartition: return "invalid-partition";
    case ErrorKind::kSplitInfeasible: return "split-infeasible";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

InfeasibleError::InfeasibleError(std::int64_t deficit, const std::string& context)
    : Error(ErrorKind::kInfeasible,
            (context.empty() ? std::string() : context + ": ") +
                "feasible region is empty (capacity deficit " + std::to_string(deficit) + ")"),
      deficit_(deficit) {}

}  // namespace dcknap
