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

#ifndef CONSTDEPTH_FAMILIES_HPP
#define CONSTDEPTH_FAMILIES_HPP

#include <set>
#include <string>
#include <vector>

#include "constdepth/monomial.hpp"
#include "constdepth/spread.hpp"

namespace constdepth {

// Disjoint monomial primes P_1..P_s, each a set of variable indices of a
// shared context.
struct PrimeAssignment {
  std::vector<std::vector<int>> primes;

  void validate(int num_vars) const;
};

// A collection {A_1,...,A_r} of nonempty subsets of [s]; r = 0 is legal.
struct SubsetCollection {
  std::vector<std::set<int>> subsets;
  int s = 0;

  void validate() const;
};

// One level of the recursive membership decision.
struct FactoringStep {
  std::vector<std::vector<int>> collection;  // canonical form at this level
  int chosen_j = 0;                          // 0: accepted by singletons/empty
  bool dropped_empty_members = false;
};

struct FamilyMembership {
  bool accepted = false;
  std::vector<FactoringStep> trace;  // depth-first, only for accepted inputs
};

// Recursive membership in the constructible family: accept singleton-only
// collections, else look for a label j splitting the collection into two
// variable-disjoint sub-problems. Memoized on canonical form.
FamilyMembership in_A(const SubsetCollection& c);

// I = Σ_j Π_{i∈A_j} P_i over the given context.
MonomialIdeal build_ideal(const SubsetCollection& c, const PrimeAssignment& p,
                          ContextPtr ctx);

struct ClassCBlock {
  std::vector<std::vector<int>> primes;  // disjoint variable-index sets
};

struct ClassCResult {
  bool accepted = false;
  std::vector<ClassCBlock> blocks;  // one transversal factorization per block
};

// Recognizer for variable-disjoint sums of transversal ideals: split into
// blocks, then recover candidate prime factors from one generator and
// verify by expansion. Squarefree input only.
ClassCResult in_class_C(const MonomialIdeal& I);

// A classified ideal ready for the disjoint-combination rules.
struct FamilyReport {
  MonomialIdeal ideal;
  bool constant = false;
  ReesCMStatus cm;
  SpreadResult spread;
};

// Sum/product of disjoint CM-guaranteed ideals: constancy propagates
// (constant iff both constant), CM persists, spread via the disjoint
// formulas.
FamilyReport combine_sum(const FamilyReport& a, const FamilyReport& b);
FamilyReport combine_product(const FamilyReport& a, const FamilyReport& b);

}  // namespace constdepth

#endif  // CONSTDEPTH_FAMILIES_HPP
