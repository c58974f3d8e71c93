// Copyright 2026 The hradius Authors
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

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using hradius::cli::run_command;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const char* name) { return std::string(HRADIUS_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("index from graph6") {
  const Run r = run({"index", "--g6", "Ch"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("command") == "index");
  CHECK(j.at("inputs").at("graph6") == "Ch");
  CHECK(j.at("results").at("harmonic") == "11/6");
  CHECK(j.at("results").at("radius") == 2);
  CHECK(j.at("results").at("class") == "EvenPath");
}

TEST_CASE("index from an edge list") {
  const Run r = run({"index", "--edges", data("path_4.txt")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("inputs").at("graph6") == "Ch");
  CHECK(j.at("results").at("harmonic") == "11/6");
}

TEST_CASE("index writes CSV") {
  const std::string path = "test_cli_index.csv";
  const Run r = run({"index", "--g6", "Bw", "--csv", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("Bw,3/2,") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("check exit codes") {
  const Run ok = run({"check", "--edges", data("k4.txt"), "--claims", "theorem3,conjecture1,rgeh"});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j.at("results").at("checks").size() == 3);
  CHECK(j.at("results").at("checks").at(0).at("bound") == "43/105");

  // K_1 sits below the strict tree bound.
  const Run bad = run({"check", "--g6", "@", "--claims", "theorem1"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.out).at("results").at("checks").at(0).at("status") == "violated");

  CHECK(run({"check", "--g6", "Ch", "--claims", "theorem2"}).code == 1);
  CHECK(run({"check", "--g6", "Ch", "--claims", "lemma7"}).code == 1);
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--family", "unicyclic", "--n", "6", "--claims", "theorem2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("results").at("graphs_examined") == 3660);
  CHECK(j.at("results").at("per_claim").at(0).at("equality_count") == 60);
  CHECK(r.err.find("3660 graphs") != std::string::npos);

  const Run v = run({"sweep", "--family", "trees", "--n", "1", "--claims", "theorem1"});
  CHECK(v.code == 2);
  CHECK(json::parse(v.out).at("results").at("violations").size() == 1);
}

TEST_CASE("sweep output does not depend on jobs") {
  const std::vector<std::string> base = {"sweep", "--family", "connected", "--n", "5",
                                         "--claims", "theorem3,conjecture2,rgeh"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  const Run a = run(base);
  const Run b = run(with_jobs);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("sweep input errors") {
  CHECK(run({"sweep", "--family", "connected", "--n", "9", "--claims", "rgeh"}).code == 1);
  CHECK(run({"sweep", "--family", "trees", "--n", "5", "--claims", "theorem2"}).code == 1);
  CHECK(run({"sweep", "--family", "forests", "--n", "5", "--claims", "rgeh"}).code == 1);
  CHECK(run({"sweep", "--family", "trees", "--n", "5"}).code == 1);
}

TEST_CASE("lemma2") {
  const Run r = run({"lemma2", "--xmax", "20", "--ymax", "20"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("results").at("min") == "-31/105");
  CHECK(j.at("results").at("argmin") == json::array({5, 5}));
  CHECK(j.at("results").at("reference_points_match") == true);
  CHECK(run({"lemma2", "--xmax", "3", "--ymax", "20"}).code == 1);
}

TEST_CASE("reduce") {
  const Run r = run({"reduce", "--edges", data("k4.txt")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json& steps = j.at("results").at("steps");
  REQUIRE(steps.size() == 3);
  CHECK(steps.at(0).at("removed").is_null());
  CHECK(steps.at(2).at("cyclomatic") == 1);
  CHECK(run({"reduce", "--g6", "Ch"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"index"}).code == 1);
  CHECK(run({"index", "--g6", "Ch", "--edges", data("path_4.txt")}).code == 1);
  CHECK(run({"index", "--g6", "C"}).code == 1);
  CHECK(run({"index", "--edges", data("bad_count.txt")}).code == 1);
  CHECK(run({"index", "--edges", data("missing.txt")}).code == 1);
  CHECK(run({"index", "--g6", "A?"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
