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


#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dcknap/error.hpp"
#include "dcknap/io.hpp"
#include "dcknap/report.hpp"
#include "fixtures.hpp"

using namespace dcknap;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_experiment_config(in);
}

std::string config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfig);
    return e.what();
  }
  FAIL("expected a config error");
  return {};
}

const char* kSmoke =
    "n_rooms = 16\n"
    "realizations = 3\n"
    "master_seed = 5\n"
    "sweep = r\n"
    "domain = 44, 54\n"
    "compare = 1\n";

}  // namespace

TEST_CASE("instance CSV round trip") {
  const InstanceBatch batch = fixtures::rooms_8x5();
  CHECK(batch.column_count() == 5);
  CHECK(batch.rooms.size() == 8);
  CHECK(batch.demands == std::vector<std::int64_t>{633, 561, 572, 502, 609});
  std::ostringstream out;
  write_instance_csv(out, batch);
  CHECK(out.str() == fixtures::read_file(fixtures::data_path("rooms_8x5.csv")));
}

TEST_CASE("columns resolve by label or 1-based index") {
  const InstanceBatch batch = fixtures::rooms_8x5();
  CHECK(batch.column_index("realization_3") == 2);
  CHECK(batch.column_index("1") == 0);
  CHECK_THROWS_AS(batch.column_index("0"), Error);
  CHECK_THROWS_AS(batch.column_index("6"), Error);
  CHECK_THROWS_AS(batch.column_index("nope"), Error);
  const ProblemInstance inst = batch.instance(1, 54);
  CHECK(inst.demand() == 561);
  CHECK(inst.capacities()[6] == 110);
}

TEST_CASE("generated batches use the instance layout") {
  std::vector<Realization> rs;
  for (std::uint64_t j = 0; j < 5; ++j) {
    rs.push_back(make_realization(Distribution::kUniform, 8, Rational(9, 10), j));
  }
  std::ostringstream out;
  write_instance_csv(out, batch_from_realizations(rs));
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  std::getline(in, line);
  CHECK(line == "room,realization_1,realization_2,realization_3,realization_4,realization_5");
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 10);
  std::istringstream back(out.str());
  const InstanceBatch parsed = read_instance_csv(back);
  CHECK(parsed.columns[4] == rs[4].capacities);
  CHECK(parsed.demands[4] == rs[4].demand);
}

TEST_CASE("malformed instance files are rejected") {
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_instance_csv(in);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidInput);
      return true;
    }
    return false;
  };
  CHECK(rejects(""));
  CHECK(rejects("rooms,a\n0,1\nDEMAND,1\n"));
  CHECK(rejects("room,a\n0,1\n"));
  CHECK(rejects("room,a\n0,x\nDEMAND,1\n"));
  CHECK(rejects("room,a,b\n0,1\nDEMAND,1,1\n"));
  CHECK(rejects("room,a\nDEMAND,1\n"));
  CHECK(rejects("room,a\n0,1\nDEMAND,1\n1,2\n"));
  try {
    read_instance_csv_file("/nonexistent/rooms.csv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("two-decimal rendering rounds half up") {
  CHECK(format_fixed(1.955) == "1.96");  // 1.955 as a double is just above 1.955
  CHECK(format_fixed(0.125) == "0.13");
  CHECK(format_fixed(-0.125) == "-0.13");
  CHECK(format_fixed(6.666666) == "6.67");
  CHECK(format_fixed(3.0, 0) == "3");
}

TEST_CASE("config parsing") {
  const ExperimentConfig c = parse(
      "# standard setting with a few overrides\n"
      "n_rooms=64\n"
      "dist = Pd\n"
      "occupancy = 0.75\n"
      "rate = 44\n"
      "sort = c\n"
      "head_fraction = 0.35  # trailing comment\n"
      "min_size = 8\n"
      "rounding = floor\n"
      "realizations = 10\n"
      "master_seed = 7\n"
      "sweep = o\n"
      "domain = 0.5,0.6\n"
      "aggregation = max\n"
      "workers = 2\n");
  CHECK(c.params.n_rooms == 64);
  CHECK(c.params.dist == Distribution::kPoisson);
  CHECK(c.params.occupancy == Rational(3, 4));
  CHECK(c.params.rate == 44);
  CHECK(c.params.sort == SortKey::kCapacity);
  CHECK(*c.params.head_fraction == Rational(7, 20));
  CHECK(c.params.min_size == 8);
  CHECK(c.params.rounding == Rounding::kFloor);
  CHECK(c.params.realizations == 10);
  CHECK(c.params.master_seed == 7);
  CHECK(c.sweep == SweepVariable::kOccupancy);
  CHECK(c.domain == std::vector<std::string>{"0.5", "0.6"});
  CHECK(c.aggregation == Aggregation::kMax);
  CHECK(c.workers == 2);

  const ExperimentConfig defaults = parse("");
  CHECK(defaults.params.n_rooms == 512);
  CHECK(defaults.sweep == SweepVariable::kRate);

  const ExperimentConfig bl = parse("tree_alg = blT\n");
  CHECK_FALSE(bl.params.head_fraction.has_value());
}

TEST_CASE("config errors list every offending key") {
  const std::string msg = config_error("colour = red\nrate = fast\nn_rooms=8\nshape = round\n");
  CHECK(msg.find("colour") != std::string::npos);
  CHECK(msg.find("rate") != std::string::npos);
  CHECK(msg.find("shape") != std::string::npos);
  CHECK(config_error("tree_alg = blT\nhead_fraction = 0.5\n").find("head_fraction") !=
        std::string::npos);
  config_error("occupancy = 0.95\n");
  config_error("just text\n");
  config_error("sweep = f\ntree_alg = blT\n");
  config_error("domain = 0.3\nsweep = o\n");
  try {
    parse_experiment_config_file("/nonexistent/config.ini");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
}

TEST_CASE("report files are deterministic and shaped per sweep") {
  ExperimentConfig c = parse(kSmoke);
  const ReportFiles a = run_report(c);
  c.workers = 3;
  const ReportFiles b = run_report(c);
  CHECK(a == b);
  for (const char* name : {"hlT_rate_GbE_DPS.csv", "blT_rate_GbE_DPS.csv", "hlT_rate_plot.csv",
                           "hlT_rate_critical_heights.csv", "hlT_rate_runs.csv", "l1_rate.csv"}) {
    CAPTURE(name);
    CHECK(a.count(name) == 1);
  }
  const std::string& table = a.at("hlT_rate_GbE_DPS.csv");
  CHECK(table.rfind("height,44,54\n0,0.00,0.00\n", 0) == 0);
  const std::string& l1 = a.at("l1_rate.csv");
  CHECK(l1.rfind("value,h_tilde,hlT_GbE_DPS,blT_GbE_DPS,hlT_all,blT_all,winner\n", 0) == 0);
  CHECK(l1.find("\nall,") != std::string::npos);
  CHECK(a.at("hlT_rate_critical_heights.csv").find("\nmode,") != std::string::npos);
  CHECK(a.at("hlT_rate_plot.csv").rfind("height,metric,strategy,value\n", 0) == 0);
}

TEST_CASE("reports are written under the output directory") {
  const auto dir = std::filesystem::temp_directory_path() / "dcknap_report_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  ReportFiles files = {{"a.csv", "x\n"}, {"b.csv", "y\n"}};
  write_report(files, dir.string());
  CHECK(fixtures::read_file((dir / "a.csv").string()) == "x\n");
  std::filesystem::remove_all(dir.parent_path());
  CHECK_THROWS_AS(write_report(files, "/proc/dcknap/forbidden"), Error);
}
