// Copyright 2026 The Authors.
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
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cgeom/cli.hpp"
#include "cgeom/closure.hpp"
#include "cgeom/dot.hpp"
#include "cgeom/error.hpp"
#include "cgeom/geometry.hpp"
#include "cgeom/io.hpp"
#include "cgeom/lattice.hpp"

using namespace cgeom;

namespace {

std::filesystem::path scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("cgeom_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

RunConfig config(Command command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("lattice json round trip") {
  const FiniteLattice n5 = construct::n5();
  const FiniteLattice back = lattice_from_json(lattice_to_json(n5));
  CHECK(back.names() == n5.names());
  CHECK(back.cover_pairs() == n5.cover_pairs());
  const FiniteLattice by_order = lattice_from_json(Json::parse(R"({"leq": [[0,1],[1,2],[0,2]]})"));
  CHECK(by_order.size() == 3);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"covers": [[0,1]], "leq": []})")), Error);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"elements": ["a"], "covers": [[0,3]]})")), Error);
}

TEST_CASE("closure json") {
  const ClosureSystem cs = closure_from_json(
      Json::parse(R"({"ground": ["a","b"], "implications": [{"if": [0], "then": 1}]})"));
  CHECK(cs.closed_sets().size() == 3);
  const ClosureSystem back = closure_from_json(closure_to_json(cs));
  CHECK(back.closed_sets() == cs.closed_sets());
  CHECK_THROWS_AS(closure_from_json(Json::parse(R"({"ground": ["a"], "closed": [[0, 4]]})")), Error);
  CHECK_THROWS_AS(closure_from_json(Json::parse(R"({"ground": ["a","b"], "closed": [[0]]})")), Error);
}

TEST_CASE("semilattice json") {
  const MeetSemilattice s = semilattice_from_json(Json::parse(R"({"meet_table": [[0,0,0],[0,1,0],[0,0,2]]})"));
  CHECK(s.size() == 3);
  CHECK(semilattice_from_json(Json::parse(R"({"covers": [[0,1],[0,2]]})")).meet(1, 2) == 0);
}

TEST_CASE("dot output") {
  const std::string b2 = emit_dot(construct::boolean(2));
  CHECK(count(b2, "label=") == 4);
  CHECK(count(b2, " -> ") == 4);
  CHECK(b2 == emit_dot(construct::boolean(2)));
  CHECK(count(b2, "rankdir=BT") == 1);

  const FiniteLattice n5 = construct::n5();
  const auto lsm = is_lower_semimodular(n5);
  const std::string marked = emit_dot(n5, {true, {}, {lsm.witness->x, lsm.witness->y, lsm.witness->z}, "n5"});
  CHECK(count(marked, "color=red, penwidth=2") == 3);
  CHECK(count(marked, "doublecircle") == 3);

  const auto k = named_instance("lattice_K");
  const std::string window = emit_dot(*k, explore(*k, 2, 4));
  CHECK(count(window, " [label=") == 5);
  CHECK(count(window, "xlabel=\"...\"") == 1);
  CHECK(window.find("label=\"a2\", shape=doublecircle, style=dashed") != std::string::npos);
}

TEST_CASE("check command") {
  const std::string n5 = write("n5.json", lattice_to_json(construct::n5()).dump());
  RunConfig c = config(Command::kCheck);
  c.input = n5;
  const RunResult r = run(c);
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  for (const Json& f : doc["report"]["conditions"]) CHECK(f == false);
  CHECK(doc["report"]["agreement"] == true);
  CHECK(run(c).output == r.output);

  c.input = (scratch() / "missing.json").string();
  const RunResult missing = run(c);
  CHECK(missing.exit_code != 0);
  CHECK(missing.error.find("ParseError") != std::string::npos);
}

TEST_CASE("generate then check round trip") {
  const std::string chain3 = write("chain3.json", R"({"elements": ["p","q","r"], "covers": [[0,1],[1,2]]})");
  RunConfig g = config(Command::kGenerate);
  g.generator = "co-poset";
  g.input = chain3;
  const RunResult r = run(g);
  REQUIRE(r.exit_code == 0);
  const Json doc = Json::parse(r.output);
  CHECK(doc["closed"].size() == 7);
  const std::string file = write("co_chain3.json", r.output);
  RunConfig c = config(Command::kCheck);
  c.input = file;
  const Json report = Json::parse(run(c).output);
  CHECK(report["closure"]["convex_geometry"] == true);
  CHECK(closure_from_json(doc).closed_sets() == closure_from_json(read_json_file(file)).closed_sets());

  g.generator = "nope";
  CHECK(run(g).exit_code != 0);
  g.generator = "n5";
  g.input.clear();
  CHECK(lattice_from_json(Json::parse(run(g).output)).size() == 5);
}

TEST_CASE("decompose command") {
  const std::string m3 = write("m3.json", lattice_to_json(construct::m3()).dump());
  RunConfig c = config(Command::kDecompose);
  c.input = m3;
  const Json doc = Json::parse(run(c).output);
  REQUIRE(doc["decompositions"].size() == 5);
  CHECK(doc["decompositions"][4]["element"] == "1");
  CHECK(doc["decompositions"][4]["decomposition"] == "none");
  CHECK(doc["decompositions"][1]["decomposition"] == Json::array({"a"}));
}

TEST_CASE("explore command") {
  RunConfig c = config(Command::kExplore);
  c.instance = "lattice_K";
  c.depth = 3;
  c.property = "strongly_spatial_at:top,b";
  const Json doc = Json::parse(run(c).output);
  CHECK(doc["status"] == "inconclusive");
  CHECK(doc["witness"].is_null());
  c.instance = "nope";
  CHECK(run(c).exit_code != 0);
}

TEST_CASE("corpus command") {
  RunConfig c = config(Command::kCorpus);
  c.generator = "moore";
  c.n = 2;
  const RunResult r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(count(r.output, "\n") == 8);
  CHECK(r.output.find(R"("summary":{"instances":7)") != std::string::npos);
  c.generator = "random";
  CHECK(run(c).exit_code != 0);
  c.seed = 4;
  c.count = 5;
  c.n = 5;
  CHECK(run(c).output == run(c).output);
}
