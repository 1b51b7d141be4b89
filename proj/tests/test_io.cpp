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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "constdepth/cli.hpp"
#include "constdepth/io.hpp"
#include "doctest.h"

using namespace constdepth;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/constdepth-io-") + name;
  std::ofstream out(path);
  out << body;
  return path;
}

int run(const std::vector<std::string>& args, std::string* captured = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("ideal grammar round trip") {
  const char* text =
      "# a comment\n"
      "vars: x1 x2 x3\n"
      "\n"
      "x1*x2^2, x3   # trailing comment\n";
  auto I = parse_ideal_input(text);
  CHECK(I.num_vars() == 3);
  CHECK(I.num_gens() == 2);
  CHECK(parse_ideal_input(format_ideal(I)) == I);

  // generators spread over several lines
  auto J = parse_ideal_input("vars: a b\na*b,\nb\n");
  CHECK(J.num_gens() == 1);  // b divides a*b, minimalized away
  CHECK(J.gens()[0].to_string(*J.context()) == "b");
}

TEST_CASE("ideal grammar errors carry positions") {
  CHECK_THROWS_AS(parse_ideal_input(""), ParseError);
  CHECK_THROWS_AS(parse_ideal_input("x1*x2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_input("vars: x1\nx9\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_input("vars: x1\nx1^-2\n"), ParseError);
  try {
    parse_ideal_input("vars: x1 x2\nx1,\ny\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
}

TEST_CASE("graph and complex grammars") {
  auto g = parse_graph_input("graph: 1-2, 2-3,\n 3-1\n");
  CHECK(g.edges.size() == 3);
  CHECK(g.has_edge(3, 1));
  CHECK_THROWS_AS(parse_graph_input("graph: 1-1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_input("graph: 1+2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_input("edges: 1-2\n"), ParseError);

  auto delta = parse_complex_input("complex: 1 2 3; 1 5; 3 4\n");
  CHECK(delta.facets.size() == 3);
  CHECK(delta.vertex_set() == std::set<int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(parse_complex_input("complex: 1 2; 1\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_input("graph: 1-2\n"), ParseError);
}

TEST_CASE("family grammar") {
  auto family = parse_family_input(
      "primes: {x1 x2} {x3}\n"
      "collection: {1 2} {1}\n");
  REQUIRE(family.ctx);
  CHECK(family.ctx->num_vars() == 3);
  CHECK(family.primes.primes.size() == 2);
  CHECK(family.collection.subsets.size() == 2);
  CHECK(family.collection.s == 2);
  auto I = build_ideal(family.collection, family.primes, family.ctx);
  CHECK(I.num_gens() == 2);  // P1P2 + P1 = P1

  auto bare = parse_family_input("collection: {1} {2}\n");
  CHECK(!bare.ctx);
  CHECK(in_A(bare.collection).accepted);

  CHECK_THROWS_AS(parse_family_input("primes: {x1} {x1}\ncollection: {1}\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_family_input("primes: {x1}\n"), ParseError);
  CHECK_THROWS_AS(parse_family_input("collection: {1 two}\n"), ParseError);
}

TEST_CASE("depth report JSON embeds a reparsable ideal") {
  auto I = parse_ideal_input("vars: x1 x2 x3\nx1*x2, x2*x3\n");
  auto report = depth_series(I, 2);
  auto j = to_json(report);
  CHECK(j["depth"] == report.depth);
  CHECK(j["series"].size() == 2);
  CHECK(parse_ideal_input(j["ideal_input"].get<std::string>()) == I);
}

TEST_CASE("cli happy paths") {
  auto ideal_file = write_temp("ex14.txt",
                               "vars: x1 x2 x3 x4 x5 x6\n"
                               "x1*x2*x3, x3*x4*x5, x1*x5*x6\n");
  std::string output;
  CHECK(run({"series", ideal_file, "--kmax", "3", "--assert-cm"}, &output) == 0);
  CHECK(output.find("series: [3,3,3]") != std::string::npos);
  CHECK(output.find("CONSTANT_FOR_ALL_POWERS") != std::string::npos);

  CHECK(run({"depth", ideal_file, "--format", "json"}, &output) == 0);
  CHECK(nlohmann::json::parse(output)["depth"] == 3);

  CHECK(run({"spread", ideal_file}, &output) == 0);
  CHECK(output.find("value: 3") != std::string::npos);

  auto graph_file = write_temp("c5.txt", "graph: 1-2, 2-3, 3-4, 4-5, 5-1\n");
  CHECK(run({"classify-edge", graph_file}, &output) == 0);
  CHECK(output.find("odd cycle") != std::string::npos);

  auto family_file = write_temp("family.txt",
                                "primes: {x1 x2} {x3}\ncollection: {1 2}\n");
  CHECK(run({"build", family_file}, &output) == 0);
  CHECK(parse_ideal_input(output).num_gens() == 2);

  CHECK(run({"check-A", family_file}, &output) == 0);
  CHECK(output.find("accepted: true") != std::string::npos);

  auto transversal = write_temp("trans.txt",
                                "vars: x1 x2 x3 x4\n"
                                "x1*x3, x1*x4, x2*x3, x2*x4\n");
  CHECK(run({"check-C", transversal}, &output) == 0);
  CHECK(output.find("accepted: true") != std::string::npos);

  auto left = write_temp("left.txt", "vars: x1 x2 x3 x4\nx1, x2\n");
  auto right = write_temp("right.txt", "vars: x1 x2 x3 x4\nx3, x4\n");
  CHECK(run({"combine", left, right, "--op", "product"}, &output) == 0);
  CHECK(output.find("constant: true") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  // NOT_APPLICABLE surfaces as exit code 2
  auto impure = write_temp("impure.txt", "complex: 1 2 3; 1 5; 3 4\n");
  std::string output;
  CHECK(run({"classify-forest", impure}, &output) == 2);
  CHECK(output.find("NOT_APPLICABLE") != std::string::npos);
  CHECK(output.find("CONSTANT_FOR_ALL_POWERS") != std::string::npos);

  auto not_matroidal = write_temp("ex14b.txt",
                                  "vars: x1 x2 x3 x4 x5 x6\n"
                                  "x1*x2*x3, x3*x4*x5, x1*x5*x6\n");
  CHECK(run({"classify-matroidal", not_matroidal}) == 2);

  CHECK(run({"depth", "/nonexistent/file"}) == 1);
  auto broken = write_temp("broken.txt", "vars: x1\nz\n");
  CHECK(run({"depth", broken}) == 1);
  CHECK(run({"frobnicate"}) == 1);
}

TEST_CASE("corpus sweep is seeded and reproducible") {
  CorpusSpec empty;
  auto none = corpus_sweep(empty);
  CHECK(none.ran == 0);
  CHECK(none.reproducers.empty());

  CorpusSpec graphs;
  graphs.kind = "graphs";
  graphs.count = 10;
  graphs.n = 5;
  graphs.k_max = 2;
  graphs.seed = 42;
  graphs.dump_dir = "/tmp";
  auto first = corpus_sweep(graphs);
  auto second = corpus_sweep(graphs);
  CHECK(first.ran == second.ran);
  CHECK(first.disagreements == 0);
  CHECK(first.findings == second.findings);

  CorpusSpec ideals;
  ideals.kind = "ideals";
  ideals.count = 10;
  ideals.n = 4;
  ideals.k_max = 2;
  ideals.seed = 7;
  ideals.dump_dir = "/tmp";
  auto swept = corpus_sweep(ideals);
  CHECK(swept.ran > 0);
  CHECK(swept.disagreements == 0);
}
