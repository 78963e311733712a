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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dcknap/io.hpp"
#include "dcknap/model.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(DCKNAP_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Eight rooms, five uniform realizations at o = 0.9.
inline dcknap::InstanceBatch rooms_8x5() {
  return dcknap::read_instance_csv_file(data_path("rooms_8x5.csv"));
}

inline dcknap::ProblemInstance realization(std::size_t column, std::int64_t rate = 54) {
  return rooms_8x5().instance(column, rate);
}

}  // namespace fixtures
