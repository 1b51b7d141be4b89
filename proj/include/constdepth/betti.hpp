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

#ifndef CONSTDEPTH_BETTI_HPP
#define CONSTDEPTH_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constdepth/complex.hpp"
#include "constdepth/monomial.hpp"

namespace constdepth {

// Resource limits for the homology engine. Exceeding a guard raises
// GuardExceeded; results are never approximated.
struct Guards {
  int lcm_max_gens = 22;
  int taylor_max_gens = 14;
  int homology_max_vertices = 24;
  int jobs = 1;  // worker threads for per-multidegree homology
};

// Multigraded Betti numbers β_{i,a}(I) of an ideal (homological index i
// counts from 0 at the generators).
struct BettiTable {
  std::map<std::pair<int, ExpVec>, long long> entries;
  FieldSpec field;

  long long total(int i) const;
  // max{i : β_{i,a} != 0}; -1 for the zero table.
  int max_index() const;
  bool operator==(const BettiTable&) const = default;
};

// Distinct componentwise maxima of nonempty subsets of G(I).
std::vector<ExpVec> lcm_lattice_degrees(const MonomialIdeal& I,
                                        const Guards& guards = {});

// Simplicial complex on supp(a) whose faces W satisfy x^{a-e_W} ∈ I.
AbstractComplex upper_koszul(const MonomialIdeal& I, const ExpVec& a);

// β_{i,a}(I) = dim H̃_{i-1}(K^a(I)) over the context field.
BettiTable betti_table(const MonomialIdeal& I, const Guards& guards = {});

// Independent route: homology of the Taylor complex tensored with the
// residue field, per multidegree strand. Same contract as betti_table.
BettiTable taylor_betti_oracle(const MonomialIdeal& I,
                               const Guards& guards = {});

int proj_dim_quotient(const BettiTable& t);

// depth S/I = n - proj_dim(S/I). Zero ideal: n by convention.
int depth(const MonomialIdeal& I, const Guards& guards = {});

struct DepthReport {
  MonomialIdeal ideal;
  int depth = 0;
  int proj_dim = 0;
  std::vector<int> series;  // depth S/I^k for k = 1..k_max
  // Largest prefix length over which the series is constant.
  int constant_up_to = 0;
  FieldSpec field;
  std::vector<std::string> guards_hit;
  // Certified limit depth, when the analytic-spread module grants one.
  std::optional<std::pair<int, std::string>> limit_claim;

  bool constant_prefix() const {
    return constant_up_to == static_cast<int>(series.size());
  }
};

DepthReport depth_series(const MonomialIdeal& I, int k_max,
                         const Guards& guards = {});

}  // namespace constdepth

#endif  // CONSTDEPTH_BETTI_HPP
