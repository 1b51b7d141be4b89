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

#ifndef CONSTDEPTH_COMPLEX_HPP
#define CONSTDEPTH_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "constdepth/monomial.hpp"

namespace constdepth {

// An abstract simplicial complex on a small labelled vertex set. Faces are
// bitmasks over local vertex positions; only the facets are stored. Two
// degenerate states are distinguished: the void complex (no faces at all)
// and the irrelevant complex {∅}.
struct AbstractComplex {
  std::vector<int> vertex_labels;
  std::vector<std::uint32_t> facets;  // maximal faces; {0} means just ∅
  bool is_void = false;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  bool is_irrelevant() const {
    return !is_void && facets.size() == 1 && facets[0] == 0;
  }

  // All faces including ∅ (mask 0), sorted ascending; empty when void.
  std::vector<std::uint32_t> all_faces() const;
};

// Builds a complex from explicit faces (downward closure is taken).
AbstractComplex complex_from_faces(std::vector<int> vertex_labels,
                                   const std::vector<std::uint32_t>& faces);

// Dimensions of reduced simplicial homology over the given field, for
// degrees -1 .. dim C; all other degrees are zero. Boundary ranks are
// computed exactly.
std::map<int, long long> reduced_homology_dims(const AbstractComplex& c,
                                               const FieldSpec& field,
                                               int max_vertices = 24);

}  // namespace constdepth

#endif  // CONSTDEPTH_COMPLEX_HPP
