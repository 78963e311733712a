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


#include "dcknap/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dcknap/error.hpp"

namespace dcknap {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::int64_t parse_int(const std::string& text, const std::string& where) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kInvalidInput, "expected integer at " + where + ", got '" + text + "'");
  }
  return value;
}

}  // namespace

std::size_t InstanceBatch::column_index(const std::string& column) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == column) return i;
  }
  std::int64_t index = 0;
  auto [ptr, ec] = std::from_chars(column.data(), column.data() + column.size(), index);
  if (ec == std::errc() && ptr == column.data() + column.size() && index >= 1 &&
      static_cast<std::size_t>(index) <= labels.size()) {
    return static_cast<std::size_t>(index - 1);
  }
  throw Error(ErrorKind::kInvalidParameter, "no column '" + column + "'");
}

ProblemInstance InstanceBatch::instance(std::size_t column, std::int64_t rate) const {
  if (column >= columns.size()) throw Error(ErrorKind::kOutOfRange, "column out of range");
  return ProblemInstance::from_rate(columns[column], rate, demands[column], rooms);
}

InstanceBatch batch_from_realizations(const std::vector<Realization>& realizations) {
  if (realizations.empty()) throw Error(ErrorKind::kInvalidInput, "empty realization batch");
  InstanceBatch batch;
  const std::size_t n = realizations.front().capacities.size();
  batch.rooms.resize(n);
  std::iota(batch.rooms.begin(), batch.rooms.end(), RoomId{0});
  for (std::size_t j = 0; j < realizations.size(); ++j) {
    if (realizations[j].capacities.size() != n) {
      throw Error(ErrorKind::kInvalidInput, "realizations differ in room count");
    }
    batch.labels.push_back("realization_" + std::to_string(j + 1));
    batch.columns.push_back(realizations[j].capacities);
    batch.demands.push_back(realizations[j].demand);
  }
  return batch;
}

void write_instance_csv(std::ostream& out, const InstanceBatch& batch) {
  out << "room";
  for (const auto& label : batch.labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < batch.rooms.size(); ++i) {
    out << batch.rooms[i];
    for (const auto& col : batch.columns) out << ',' << col[i];
    out << '\n';
  }
  out << "SUM";
  for (const auto& col : batch.columns) {
    out << ',' << std::accumulate(col.begin(), col.end(), std::int64_t{0});
  }
  out << '\n';
  out << "DEMAND";
  for (std::int64_t d : batch.demands) out << ',' << d;
  out << '\n';
}

InstanceBatch read_instance_csv(std::istream& in) {
  InstanceBatch batch;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::kInvalidInput, "empty instance file");
  auto header = split_csv_line(line);
  if (header.size() < 2 || header.front() != "room") {
    throw Error(ErrorKind::kInvalidInput, "instance header must start with 'room'");
  }
  batch.labels.assign(header.begin() + 1, header.end());
  batch.columns.assign(batch.labels.size(), {});
  bool have_demand = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorKind::kInvalidInput,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " cells, got " + std::to_string(cells.size()));
    }
    const std::string where = "line " + std::to_string(line_no);
    if (cells.front() == "SUM") continue;
    if (cells.front() == "DEMAND") {
      for (std::size_t j = 1; j < cells.size(); ++j) batch.demands.push_back(parse_int(cells[j], where));
      have_demand = true;
      continue;
    }
    if (have_demand) throw Error(ErrorKind::kInvalidInput, where + ": room row after DEMAND");
    const std::int64_t room = parse_int(cells.front(), where);
    if (room < 0) throw Error(ErrorKind::kInvalidInput, where + ": negative room label");
    batch.rooms.push_back(static_cast<RoomId>(room));
    for (std::size_t j = 1; j < cells.size(); ++j) batch.columns[j - 1].push_back(parse_int(cells[j], where));
  }
  if (!have_demand) throw Error(ErrorKind::kInvalidInput, "instance file lacks a DEMAND row");
  if (batch.rooms.empty()) throw Error(ErrorKind::kInvalidInput, "instance file has no rooms");
  return batch;
}

InstanceBatch read_instance_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return read_instance_csv(in);
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing '" + path + "'");
}

std::string membership_table_csv(const DCTree& tree) {
  std::ostringstream out;
  out << "room";
  for (std::size_t v = 0; v < tree.size(); ++v) out << ",vertex_" << v;
  out << '\n';
  for (std::size_t pos : tree.root().rooms) {
    out << tree.instance().room_ids()[pos];
    for (std::size_t v = 0; v < tree.size(); ++v) {
      const auto& rooms = tree.node(v).rooms;
      const bool member = std::find(rooms.begin(), rooms.end(), pos) != rooms.end();
      out << ',' << (member ? 1 : 0);
    }
    out << '\n';
  }
  out << 'D';
  for (std::size_t v = 0; v < tree.size(); ++v) out << ',' << tree.node(v).demand;
  out << '\n';
  return out.str();
}

std::string efficiency_table_csv(const EfficiencySeries& series) {
  std::ostringstream out;
  out << "height";
  for (Metric m : kAllMetrics) out << ',' << to_string(m);
  out << '\n';
  for (int h = 0; h <= series.height(); ++h) {
    out << h;
    for (Metric m : kAllMetrics) {
      out << ',';
      if (h == 0 && is_stepwise(m)) continue;
      out << series.value(m, h).to_fixed(2);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_fixed(double value, int decimals) {
  return Rational::from_double(value).to_fixed(decimals);
}

}  // namespace dcknap
