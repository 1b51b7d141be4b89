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
#include <random>

#include "constdepth/betti.hpp"
#include "constdepth/spread.hpp"
#include "doctest.h"

using namespace constdepth;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(ExpVec(e)); }

MonomialIdeal example_14_ideal() {
  auto ctx = make_context(6);
  return MonomialIdeal(ctx, {mono({1, 1, 1, 0, 0, 0}), mono({0, 0, 1, 1, 1, 0}),
                             mono({1, 0, 0, 0, 1, 1})});
}

MonomialIdeal k23_edge_ideal() {
  // parts {x1,x2} and {x3,x4,x5}
  auto ctx = make_context(5);
  std::vector<Monomial> gens;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) {
      ExpVec e(5, 0);
      e[i] = e[j] = 1;
      gens.emplace_back(std::move(e));
    }
  return MonomialIdeal(ctx, gens);
}

// Random monomial prime on the given variables of a shared context.
MonomialIdeal prime_on(ContextPtr ctx, const std::vector<int>& vars) {
  std::vector<Monomial> gens;
  for (int v : vars) gens.push_back(variable_monomial(ctx->num_vars(), v));
  return MonomialIdeal(ctx, gens);
}

}  // namespace

TEST_CASE("exponent-rank spread on the running examples") {
  CHECK(spread_exponent_rank(example_14_ideal()).value == 3);

  auto ctx = make_context(2);
  auto principal = MonomialIdeal(ctx, {mono({1, 1})});
  CHECK(spread_exponent_rank(principal).value == 1);

  CHECK(spread_exponent_rank(k23_edge_ideal()).value == 4);

  auto mixed = MonomialIdeal(make_context(2), {mono({1, 0}), mono({1, 1})});
  CHECK_THROWS_AS(spread_exponent_rank(mixed), InvalidIdealInput);
}

TEST_CASE("mu-growth spread") {
  auto ctx = make_context(2);
  auto principal = MonomialIdeal(ctx, {mono({1, 1})});
  auto r1 = spread_mu_growth(principal, 4);
  CHECK(r1.value == 1);
  CHECK(r1.exact());

  auto m2 = MonomialIdeal(ctx, {mono({1, 0}), mono({0, 1})});
  auto r2 = spread_mu_growth(m2, 4);
  CHECK(r2.value == 2);
  CHECK(r2.exact());

  auto r3 = spread_mu_growth(example_14_ideal(), 5);
  CHECK(r3.value == 3);

  CHECK_THROWS_AS(spread_mu_growth(principal, 2), InvalidIdealInput);
}

TEST_CASE("disjoint sum and product formulas") {
  CHECK(spread_sum_disjoint(2, 3) == 5);
  CHECK(spread_product_disjoint(2, 3) == 4);
  CHECK(spread_product_disjoint(1, 1) == 1);

  auto ctx = make_context(4);
  auto I = prime_on(ctx, {0, 1});
  auto J = prime_on(ctx, {2, 3});
  int li = spread_exponent_rank(I).value;
  int lj = spread_exponent_rank(J).value;
  CHECK(spread_sum_disjoint(li, lj) == spread_exponent_rank(sum(I, J)).value);
  CHECK(spread_product_disjoint(li, lj) ==
        spread_exponent_rank(product(I, J)).value);
}

TEST_CASE("random disjoint equigenerated pairs obey the spread formulas") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    int n1 = 2 + static_cast<int>(rng() % 2);
    int n2 = 2 + static_cast<int>(rng() % 2);
    auto ctx = make_context(n1 + n2);
    std::vector<int> left(n1), right(n2);
    for (int i = 0; i < n1; ++i) left[i] = i;
    for (int i = 0; i < n2; ++i) right[i] = n1 + i;
    auto I = prime_on(ctx, left);
    auto J = prime_on(ctx, right);
    int li = spread_exponent_rank(I).value;
    int lj = spread_exponent_rank(J).value;
    CHECK(spread_exponent_rank(sum(I, J)).value == li + lj);
    CHECK(spread_exponent_rank(product(I, J)).value == li + lj - 1);
  }
}

TEST_CASE("Burch bound") {
  auto I = example_14_ideal();
  CHECK(burch_bound(I, spread_exponent_rank(I)) == 3);

  auto ctx = make_context(3);
  auto mm = MonomialIdeal(ctx, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  CHECK(burch_bound(mm, spread_exponent_rank(mm)) == 0);

  CHECK(burch_bound(k23_edge_ideal(), spread_exponent_rank(k23_edge_ideal())) ==
        1);

  SpreadResult heuristic{2, SpreadMethod::mu_growth,
                         Confidence::heuristic_lower_bound, 3};
  CHECK_THROWS_AS(burch_bound(I, heuristic), InvalidIdealInput);
}

TEST_CASE("constancy certificates") {
  auto I = example_14_ideal();
  auto cert = certify_constant(I, ReesCMStatus::asserted(), depth(I),
                               spread_exponent_rank(I));
  CHECK(cert.verdict == Verdict::CONSTANT_FOR_ALL_POWERS);
  CHECK(cert.n_minus_ell == 3);

  auto ctx = make_context(3);
  auto mm = MonomialIdeal(ctx, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  auto c2 = certify_constant(mm, ReesCMStatus::guaranteed(CMReason::matroidal),
                             depth(mm), spread_exponent_rank(mm));
  CHECK(c2.verdict == Verdict::CONSTANT_FOR_ALL_POWERS);

  // Unknown CM status defers to series evidence.
  auto triangle =
      MonomialIdeal(ctx, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})});
  auto c3 = certify_constant(triangle, ReesCMStatus::unknown_status(),
                             depth(triangle), spread_exponent_rank(triangle));
  CHECK(c3.verdict == Verdict::EVIDENCE_ONLY);

  // depth below n-ℓ with a CM grant is impossible; report inconsistency.
  CHECK_THROWS_AS(
      certify_constant(mm, ReesCMStatus::asserted(), -1,
                       spread_exponent_rank(mm)),
      InternalInconsistency);
}

TEST_CASE("depth respects the Burch bound on CM-guaranteed inputs") {
  // transversal ideals are matroidal, so their Rees ring is CM
  auto ctx = make_context(5);
  auto I = product(prime_on(ctx, {0, 1}), prime_on(ctx, {2, 3, 4}));
  auto l = spread_exponent_rank(I);
  Guards roomy;
  roomy.lcm_max_gens = 64;  // |G(I^3)| = 40
  CHECK(depth(I, roomy) >= burch_bound(I, l));
  auto series = depth_series(I, 3, roomy).series;
  int observed_min = *std::min_element(series.begin(), series.end());
  CHECK(observed_min == burch_bound(I, l));
  // non-increasing once the minimum is reached
  bool hit = false;
  for (int v : series) {
    if (v == observed_min) hit = true;
    if (hit) CHECK(v == observed_min);
  }
}
