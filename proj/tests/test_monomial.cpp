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

#include "constdepth/monomial.hpp"
#include "doctest.h"

using namespace constdepth;

namespace {

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(ExpVec(e)); }

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, ContextPtr ctx,
                                      int max_gens) {
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Monomial> gens;
  int m = gen_count(rng);
  for (int g = 0; g < m; ++g) {
    ExpVec e(ctx->num_vars(), 0);
    for (auto& x : e) x = coin(rng);
    if (Monomial(e).is_one()) e[0] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(ctx, std::move(gens));
}

}  // namespace

TEST_CASE("minimalize removes divisible and duplicate generators") {
  auto ctx = make_context(3);
  auto I = minimalize(ctx, {mono({1, 1, 0}), mono({1, 1, 1}), mono({0, 0, 1})});
  CHECK(I.gens() == std::vector<Monomial>{mono({0, 0, 1}), mono({1, 1, 0})});

  auto Z = minimalize(ctx, {});
  CHECK(Z.is_zero());

  auto D = minimalize(ctx, {mono({2, 0, 0}), mono({2, 0, 0})});
  CHECK(D.num_gens() == 1);
  CHECK(D.gens()[0] == mono({2, 0, 0}));
}

TEST_CASE("minimalize is idempotent") {
  std::mt19937_64 rng(7);
  auto ctx = make_context(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto I = random_squarefree_ideal(rng, ctx, 6);
    auto again = minimalize(ctx, I.gens());
    CHECK(I == again);
    // antichain check
    for (int i = 0; i < I.num_gens(); ++i)
      for (int j = 0; j < I.num_gens(); ++j)
        if (i != j) CHECK_FALSE(I.gens()[i].divides(I.gens()[j]));
  }
}

TEST_CASE("basic arithmetic examples") {
  auto ctx = make_context(3);
  auto x1 = MonomialIdeal(ctx, {mono({1, 0, 0})});
  auto x2 = MonomialIdeal(ctx, {mono({0, 1, 0})});
  CHECK(intersect(x1, x2).gens() == std::vector<Monomial>{mono({1, 1, 0})});

  auto I = MonomialIdeal(ctx, {mono({1, 1, 0}), mono({0, 0, 1})});
  auto C = colon(I, mono({1, 0, 0}));
  CHECK(C.gens() == std::vector<Monomial>{mono({0, 0, 1}), mono({0, 1, 0})});

  auto J = MonomialIdeal(ctx, {mono({1, 1, 0}), mono({0, 1, 1})});
  auto J2 = power(J, 2);
  CHECK(J2.gens() == std::vector<Monomial>{mono({0, 2, 2}), mono({1, 2, 1}),
                                           mono({2, 2, 0})});

  auto R = radical(MonomialIdeal(ctx, {mono({2, 2, 0})}));
  CHECK(R.gens() == std::vector<Monomial>{mono({1, 1, 0})});
}

TEST_CASE("power arguments validated") {
  auto ctx = make_context(2);
  auto I = MonomialIdeal(ctx, {mono({1, 0})});
  CHECK_THROWS_AS(power(I, 0), InvalidIdealInput);
}

TEST_CASE("mixed contexts rejected") {
  auto a = make_context(2);
  auto b = make_context(3);
  auto I = MonomialIdeal(a, {Monomial(ExpVec{1, 0})});
  auto J = MonomialIdeal(b, {Monomial(ExpVec{0, 1, 0})});
  CHECK_THROWS_AS(sum(I, J), ContextMismatch);
}

TEST_CASE("support, gcd, equigenerated, blocks") {
  auto ctx = make_context(6);
  auto I = MonomialIdeal(ctx, {mono({1, 1, 1, 0, 0, 0}), mono({0, 0, 1, 1, 1, 0}),
                               mono({1, 0, 0, 0, 1, 1})});
  CHECK(support(I) == std::set<int>{0, 1, 2, 3, 4, 5});
  CHECK(gcd_of_gens(I).is_one());
  CHECK(is_equigenerated(I) == Exponent{3});

  auto two = MonomialIdeal(ctx, {mono({1, 0, 1, 0, 0, 0}), mono({0, 1, 0, 1, 0, 0})});
  auto blocks = variable_disjoint_blocks(two);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].num_gens() == 1);
  CHECK(blocks[1].num_gens() == 1);

  auto one = MonomialIdeal(ctx, {mono({1, 1, 0, 0, 0, 0}), mono({0, 1, 1, 0, 0, 0})});
  CHECK(variable_disjoint_blocks(one).size() == 1);

  CHECK_THROWS_AS(gcd_of_gens(zero_ideal(ctx)), InvalidIdealInput);
}

TEST_CASE("disjoint supports: product equals intersection") {
  std::mt19937_64 rng(11);
  auto ctx = make_context(6);
  for (int trial = 0; trial < 40; ++trial) {
    // I in x1..x3, J in x4..x6
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Monomial> gi, gj;
    for (int g = 0; g < 3; ++g) {
      ExpVec a(6, 0), b(6, 0);
      for (int v = 0; v < 3; ++v) a[v] = coin(rng);
      for (int v = 3; v < 6; ++v) b[v] = coin(rng);
      if (!Monomial(a).is_one()) gi.emplace_back(a);
      if (!Monomial(b).is_one()) gj.emplace_back(b);
    }
    if (gi.empty() || gj.empty()) continue;
    auto I = minimalize(ctx, gi);
    auto J = minimalize(ctx, gj);
    CHECK(product(I, J) == intersect(I, J));
  }
}

TEST_CASE("disjoint supports: generator products survive in sum powers") {
  auto ctx = make_context(6);
  auto I = minimalize(ctx, {mono({1, 1, 0, 0, 0, 0}), mono({0, 1, 1, 0, 0, 0})});
  auto J = minimalize(ctx, {mono({0, 0, 0, 1, 1, 0}), mono({0, 0, 0, 0, 1, 1})});
  for (int k = 1; k <= 4; ++k) {
    auto sk = power(sum(I, J), k);
    for (int i = 0; i <= k; ++i) {
      std::vector<Monomial> left = i == 0
                                       ? std::vector<Monomial>{one_monomial(6)}
                                       : power(I, i).gens();
      std::vector<Monomial> right =
          i == k ? std::vector<Monomial>{one_monomial(6)}
                 : power(J, k - i).gens();
      for (const auto& u : left)
        for (const auto& v : right) {
          auto w = u * v;
          bool found = false;
          for (const auto& g : sk.gens())
            if (g == w) found = true;
          CHECK(found);
        }
    }
  }
}

TEST_CASE("power is additive and radical stable on squarefree ideals") {
  std::mt19937_64 rng(23);
  auto ctx = make_context(4);
  for (int trial = 0; trial < 25; ++trial) {
    auto I = random_squarefree_ideal(rng, ctx, 4);
    if (I.is_unit()) continue;
    CHECK(power(I, 3) == product(power(I, 1), power(I, 2)));
    for (int k = 1; k <= 3; ++k) CHECK(radical(power(I, k)) == radical(I));
  }
}
