// Copyright 2026 The shadowcut developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = SHADOWCUT_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("shadowcut-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

int run_cli(const std::string& args) {
  const std::string command = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("gen-ansatz, cut, oracle and estimate work end to end") {
  TempDir dir;
  const std::string circuit = dir.file("circuit.json");
  const std::string cuts = dir.file("cuts.json");

  REQUIRE(run_cli("gen-ansatz --clusters 2 --cluster-size 2 --seed 5 --out " +
                  circuit + " --cuts-out " + cuts) == 0);
  const json cj = json::parse(slurp(circuit));
  CHECK(cj.at("n_qubits").get<int>() == 4);
  CHECK(cj.at("gates").size() == 5);
  const json kj = json::parse(slurp(cuts));
  CHECK(kj.at("cuts").size() == 2);

  const std::string graph = dir.file("graph.json");
  REQUIRE(run_cli("cut --circuit " + circuit + " --cuts " + cuts + " --out " +
                  graph) == 0);
  const json gj = json::parse(slurp(graph));
  CHECK(gj.at("fragments").size() == 2);

  const std::string oracle_out = dir.file("oracle.json");
  REQUIRE(run_cli("oracle --circuit " + circuit + " --cuts " + cuts +
                  " --obs \"Z1 Z3\" --out " + oracle_out) == 0);
  const json oj = json::parse(slurp(oracle_out));
  CHECK(oj.at("delta").get<double>() <= 1e-10);

  const std::string report = dir.file("report.json");
  REQUIRE(run_cli("estimate --circuit " + circuit + " --cuts " + cuts +
                  " --obs \"Z1 Z3\" --shots 20000 --seed 11 --out " +
                  report) == 0);
  const json rj = json::parse(slurp(report));
  CHECK(std::abs(rj.at("estimate").get<double>() -
                 oj.at("uncut").get<double>()) <= 0.25);
  CHECK(rj.at("m_assignments").get<int>() == 16);
}

TEST_CASE("shadow files feed estimate through --shadows") {
  TempDir dir;
  const std::string circuit = dir.file("circuit.json");
  const std::string cuts = dir.file("cuts.json");
  REQUIRE(run_cli("gen-ansatz --clusters 2 --cluster-size 2 --seed 9 --out " +
                  circuit + " --cuts-out " + cuts) == 0);

  const std::string f0 = dir.file("f0.jsonl");
  const std::string f1 = dir.file("f1.jsonl");
  REQUIRE(run_cli("shadow --circuit " + circuit + " --cuts " + cuts +
                  " --fragment 0 --shots 5000 --seed 21 --out " + f0) == 0);
  REQUIRE(run_cli("shadow --circuit " + circuit + " --cuts " + cuts +
                  " --fragment 1 --shots 5000 --seed 22 --out " + f1) == 0);

  const std::string report = dir.file("report.json");
  REQUIRE(run_cli("estimate --circuit " + circuit + " --cuts " + cuts +
                  " --obs \"Z1\" --shadows " + f0 + " --shadows " + f1 +
                  " --out " + report) == 0);
  const json rj = json::parse(slurp(report));
  CHECK(rj.at("per_fragment").size() == 2);
}

TEST_CASE("bounds subcommand emits a quote per surviving fragment") {
  TempDir dir;
  const std::string circuit = dir.file("circuit.json");
  const std::string cuts = dir.file("cuts.json");
  REQUIRE(run_cli("gen-ansatz --clusters 2 --cluster-size 2 --seed 3 --out " +
                  circuit + " --cuts-out " + cuts) == 0);
  const std::string out = dir.file("bounds.json");
  REQUIRE(run_cli("bounds --circuit " + circuit + " --cuts " + cuts +
                  " --obs-size 4 --epsilon 0.1 --delta 0.05 --format json "
                  "--out " +
                  out) == 0);
  const json bj = json::parse(slurp(out));
  CHECK(bj.size() == 2);
  CHECK(bj[0].at("k_groups").get<double>() > 0.0);
  CHECK(bj[0].at("log_base").get<std::string>() == "natural");
}

TEST_CASE("experiment CSV is deterministic and feeds unobserved-stats") {
  TempDir dir;
  const std::string csv_a = dir.file("a.csv");
  const std::string csv_b = dir.file("b.csv");
  const std::string args =
      "experiment --clusters 2 --cluster-size 2 --trials 2 --seed 7 "
      "--shots 30 --shots 60 --obs-size 1 --obs-size 2 --fragments 1 "
      "--fragments 2 --out ";
  REQUIRE(run_cli(args + csv_a) == 0);
  REQUIRE(run_cli(args + csv_b) == 0);
  CHECK(slurp(csv_a) == slurp(csv_b));

  const std::string stats = dir.file("stats.json");
  REQUIRE(run_cli("unobserved-stats --records " + csv_a + " --out " + stats) ==
          0);
  const json sj = json::parse(slurp(stats));
  CHECK(sj.size() == 4);  // two shot values x two sizes
}

TEST_CASE("validation failures exit 2, size refusals exit 3") {
  TempDir dir;
  const std::string circuit = dir.file("circuit.json");
  REQUIRE(run_cli("gen-ansatz --clusters 2 --cluster-size 2 --seed 1 --out " +
                  circuit) == 0);

  // Bad observable token.
  CHECK(run_cli("oracle --circuit " + circuit + " --obs \"Q1\"") == 2);
  // Cut on a wire that does not exist.
  const std::string bad_cuts = dir.file("bad_cuts.json");
  std::ofstream(bad_cuts) << R"({"cuts":[{"wire":9,"after_gate":1}]})";
  CHECK(run_cli("cut --circuit " + circuit + " --cuts " + bad_cuts) == 2);
  // A register beyond the statevector guardrail.
  CHECK(run_cli("gen-ansatz --clusters 4 --cluster-size 4 --seed 1 --out " +
                dir.file("big.json")) == 3);
  // Missing file.
  CHECK(run_cli("cut --circuit /nonexistent.json --cuts " + bad_cuts) == 2);
}
