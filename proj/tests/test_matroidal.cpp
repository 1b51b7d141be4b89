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
#include "constdepth/betti.hpp"
#include "constdepth/matroidal.hpp"
#include "doctest.h"

using namespace constdepth;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(ExpVec(e)); }

// expanded product (x1,x2)(x3,x4)
MonomialIdeal transversal_22() {
  auto ctx = make_context(4);
  return MonomialIdeal(ctx, {mono({1, 0, 1, 0}), mono({1, 0, 0, 1}),
                             mono({0, 1, 1, 0}), mono({0, 1, 0, 1})});
}

// bases of the uniform matroid U_{2,4}: all squarefree degree-2 monomials
MonomialIdeal uniform_24() {
  auto ctx = make_context(4);
  std::vector<Monomial> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      ExpVec e(4, 0);
      e[i] = e[j] = 1;
      gens.emplace_back(std::move(e));
    }
  return MonomialIdeal(ctx, gens);
}

MonomialIdeal example_14_ideal() {
  auto ctx = make_context(6);
  return MonomialIdeal(ctx, {mono({1, 1, 1, 0, 0, 0}), mono({0, 0, 1, 1, 1, 0}),
                             mono({1, 0, 0, 0, 1, 1})});
}

}  // namespace

TEST_CASE("exchange-property check") {
  CHECK(is_matroidal(transversal_22()).matroidal);
  CHECK(is_matroidal(uniform_24()).matroidal);

  auto bad = is_matroidal(example_14_ideal());
  CHECK(!bad.matroidal);
  REQUIRE(bad.witness);
  // the witness really fails: no exchange of its variable lands in I
  const auto& w = *bad.witness;
  CHECK(w.u.exp(w.var) > 0);
  CHECK(w.v.exp(w.var) == 0);

  auto ctx = make_context(3);
  CHECK_THROWS_AS(is_matroidal(MonomialIdeal(ctx, {mono({2, 0, 0})})),
                  InvalidIdealInput);
  CHECK_THROWS_AS(
      is_matroidal(MonomialIdeal(ctx, {mono({1, 0, 0}), mono({0, 1, 1})})),
      InvalidIdealInput);
  CHECK_THROWS_AS(is_matroidal(zero_ideal(ctx)), InvalidIdealInput);
}

TEST_CASE("linear relation graph") {
  auto ctx = make_context(2);
  auto line = MonomialIdeal(ctx, {mono({1, 0}), mono({0, 1})});
  auto g1 = linear_relation_graph(line);
  CHECK(g1.r == 2);
  CHECK(g1.s == 1);

  auto g2 = linear_relation_graph(transversal_22());
  CHECK(g2.r == 4);
  CHECK(g2.s == 2);
  CHECK(g2.components[0] == std::set<int>{0, 1});
  CHECK(g2.components[1] == std::set<int>{2, 3});
  // no relation edge crosses the two factors
  for (const auto& [a, b] : g2.edges)
    CHECK((a < 2) == (b < 2));

  auto g3 = linear_relation_graph(uniform_24());
  CHECK(g3.r == 4);
  CHECK(g3.s == 1);
}

TEST_CASE("classification of the standard fixtures") {
  auto good = classify_matroidal(transversal_22());
  CHECK(good.matroidal);
  CHECK(good.d == 2);
  CHECK(good.s == 2);
  CHECK(good.constant);
  REQUIRE(good.factors.size() == 2);
  CHECK(good.factors[0] == std::vector<int>{0, 1});
  CHECK(good.factors[1] == std::vector<int>{2, 3});

  auto uniform = classify_matroidal(uniform_24());
  CHECK(uniform.matroidal);
  CHECK(uniform.d == 2);
  CHECK(uniform.s == 1);
  CHECK(!uniform.constant);
  CHECK(uniform.factors.empty());

  auto rejected = classify_matroidal(example_14_ideal());
  CHECK(!rejected.matroidal);
  CHECK(rejected.witness);
}

TEST_CASE("classification normalizes gcd and unused variables") {
  // x5 * (x1,x2)(x3,x4) in a 5-variable ring
  auto ctx = make_context(5);
  std::vector<Monomial> gens;
  auto base = transversal_22();
  for (const auto& g : base.gens()) {
    ExpVec e(g.exps());
    e.push_back(1);
    gens.emplace_back(std::move(e));
  }
  auto verdict = classify_matroidal(MonomialIdeal(ctx, gens));
  CHECK(verdict.matroidal);
  CHECK(verdict.normalized_by_gcd == mono({0, 0, 0, 0, 1}));
  CHECK(verdict.dropped_variables == std::vector<int>{4});
  CHECK(verdict.d == 2);
  CHECK(verdict.constant);
  REQUIRE(verdict.factors.size() == 2);
  CHECK(verdict.factors[0] == std::vector<int>{0, 1});

  // principal: normalizes to the unit ideal, d = 0, trivially constant
  auto principal =
      classify_matroidal(MonomialIdeal(make_context(3), {mono({1, 1, 1})}));
  CHECK(principal.matroidal);
  CHECK(principal.d == 0);
  CHECK(principal.constant);
}

TEST_CASE("depth and spread formulas against the engine") {
  // d - 1 matches the computed depth for the constant product
  CHECK(depth_formula_matroidal(transversal_22()) == 1);
  CHECK(depth(transversal_22()) == 1);

  CHECK(spread_matroidal(transversal_22()).value == 3);
  CHECK(spread_matroidal(transversal_22()).value ==
        spread_exponent_rank(transversal_22()).value);
  CHECK(spread_matroidal(uniform_24()).value == 4);
  CHECK(spread_matroidal(uniform_24()).value ==
        spread_exponent_rank(uniform_24()).value);

  CHECK_THROWS_AS(spread_matroidal(example_14_ideal()), InvalidIdealInput);
  CHECK_THROWS_AS(depth_formula_matroidal(example_14_ideal()),
                  InvalidIdealInput);
}

TEST_CASE("constant matroidal classification matches the depth series") {
  auto report = depth_series(transversal_22(), 3);
  CHECK(report.series == std::vector<int>{1, 1, 1});
  CHECK(report.constant_prefix());
}
