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

#ifndef CONSTDEPTH_FOREST_HPP
#define CONSTDEPTH_FOREST_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "constdepth/monomial.hpp"
#include "constdepth/spread.hpp"

namespace constdepth {

// A simplicial complex given by its facet list (an antichain of vertex
// sets over integer labels).
struct SimplicialComplex {
  std::vector<std::set<int>> facets;

  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<std::set<int>> facet_list);

  std::set<int> vertex_set() const;
  int dim() const;  // max |F| - 1
};

// One generator x_F per facet, over x_v for v in the vertex set.
MonomialIdeal facet_ideal(const SimplicialComplex& delta);

struct Leaf {
  std::set<int> facet;
  std::optional<std::set<int>> branch;  // absent for a lone facet
};

std::vector<Leaf> leaves(const SimplicialComplex& delta);
std::set<int> free_vertices(const SimplicialComplex& delta,
                            const std::set<int>& facet);

// Every subcollection of facets has a leaf; exhaustive over the 2^m
// subcollections with early exit, guarded.
bool is_forest(const SimplicialComplex& delta, int max_facets = 20);
bool is_pure(const SimplicialComplex& delta);
std::vector<SimplicialComplex> components(const SimplicialComplex& delta);
// Any two facets joined by a chain of facets whose successive
// intersections have dimension d-1 (pure complexes only).
bool connected_in_codim_one(const SimplicialComplex& delta);

struct ForestComponentFactor {
  std::string gcd;              // the common monomial factor u, printed
  std::vector<int> prime_vars;  // P with I(Δ_i) = u · P; empty for m = 1
};

struct ForestVerdict {
  bool applicable = false;
  std::vector<std::string> failed_hypotheses;
  bool constant = false;
  std::vector<ForestComponentFactor> presentation;
};

// Classifier for pure forests with every component connected in
// codimension one: constant iff each component's facet ideal factors as
// u·P with P a monomial prime. Hypothesis failures yield a
// NOT_APPLICABLE verdict naming the failed hypothesis.
ForestVerdict classify_forest(const SimplicialComplex& delta,
                              int max_facets = 20);

// ℓ(I(Δ)) = number of facets, for simplicial forests.
SpreadResult spread_forest(const SimplicialComplex& delta,
                           int max_facets = 20);

}  // namespace constdepth

#endif  // CONSTDEPTH_FOREST_HPP
