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

#ifndef CONSTDEPTH_MATROIDAL_HPP
#define CONSTDEPTH_MATROIDAL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "constdepth/monomial.hpp"
#include "constdepth/spread.hpp"

namespace constdepth {

// The graph whose edges {i,j} witness linear relations x_i u_k = x_j u_l
// between minimal generators.
struct LinearRelationGraph {
  std::set<int> vertices;                 // variable indices
  std::set<std::pair<int, int>> edges;    // first < second
  std::vector<std::set<int>> components;  // ordered by least variable
  int r = 0;  // |vertices|
  int s = 0;  // number of components
};

struct ExchangeWitness {
  Monomial u, v;
  int var = -1;  // x_var divides u but no exchange variable exists in v
};

struct MatroidalCheck {
  bool matroidal = false;
  std::optional<ExchangeWitness> witness;
};

// Exhaustive exchange-property check over all (u, v, i); squarefree
// equigenerated input required.
MatroidalCheck is_matroidal(const MonomialIdeal& I);

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I);

struct MatroidalVerdict {
  bool matroidal = false;
  std::optional<ExchangeWitness> witness;
  // Normalization applied before classifying: divided-out gcd and the
  // variables outside the support.
  Monomial normalized_by_gcd;
  std::vector<int> dropped_variables;
  int d = 0;  // common degree of the normalized ideal
  int r = 0;
  int s = 0;
  bool constant = false;
  // When constant: the prime factorization I = P_1 ... P_d, each factor a
  // set of variable indices of the original context.
  std::vector<std::vector<int>> factors;
};

// Full classifier: on the normalized ideal, constant iff the
// linear relation graph has exactly d components; the factorization is
// read off the components and verified by expansion.
MatroidalVerdict classify_matroidal(const MonomialIdeal& I);

// depth S/I = d - 1 for a normalized matroidal ideal of degree d.
int depth_formula_matroidal(const MonomialIdeal& I);

// ℓ(I) = r - s + 1 for matroidal ideals.
SpreadResult spread_matroidal(const MonomialIdeal& I);

}  // namespace constdepth

#endif  // CONSTDEPTH_MATROIDAL_HPP
