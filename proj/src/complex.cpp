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

#include "constdepth/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "constdepth/linalg.hpp"

namespace constdepth {

std::vector<std::uint32_t> AbstractComplex::all_faces() const {
  if (is_void) return {};
  std::set<std::uint32_t> faces;
  // Downward closure of each facet, walking sub-masks.
  for (std::uint32_t f : facets) {
    std::uint32_t sub = f;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return {faces.begin(), faces.end()};
}

AbstractComplex complex_from_faces(std::vector<int> vertex_labels,
                                   const std::vector<std::uint32_t>& faces) {
  AbstractComplex c;
  c.vertex_labels = std::move(vertex_labels);
  if (faces.empty()) {
    c.is_void = true;
    return c;
  }
  for (std::uint32_t f : faces) {
    bool maximal = true;
    for (std::uint32_t g : faces)
      if (g != f && (f & g) == f) {
        maximal = false;
        break;
      }
    if (maximal && std::find(c.facets.begin(), c.facets.end(), f) ==
                       c.facets.end())
      c.facets.push_back(f);
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

std::map<int, long long> reduced_homology_dims(const AbstractComplex& c,
                                               const FieldSpec& field,
                                               int max_vertices) {
  if (c.num_vertices() > max_vertices)
    throw GuardExceeded("homology guard: complex has " +
                        std::to_string(c.num_vertices()) +
                        " vertices, limit " + std::to_string(max_vertices));
  std::map<int, long long> dims;
  if (c.is_void) return dims;

  auto faces = c.all_faces();
  // Faces grouped by cardinality: chain group C_j has basis the faces with
  // j+1 vertices, C_{-1} = {∅}.
  int top = 0;
  for (std::uint32_t f : faces) top = std::max(top, std::popcount(f));
  std::vector<std::vector<std::uint32_t>> by_size(top + 1);
  std::map<std::uint32_t, int> index_in_size;
  for (std::uint32_t f : faces) by_size[std::popcount(f)].push_back(f);
  for (auto& level : by_size) {
    std::sort(level.begin(), level.end());
    for (size_t i = 0; i < level.size(); ++i)
      index_in_size[level[i]] = static_cast<int>(i);
  }

  // rank of the boundary map from faces of cardinality k to k-1.
  auto boundary_rank = [&](int k) -> int {
    if (k <= 0 || k > top) return 0;
    const auto& domain = by_size[k];
    const auto& codomain = by_size[k - 1];
    if (domain.empty() || codomain.empty()) return 0;
    IntMatrix m(domain.size(), std::vector<long long>(codomain.size(), 0));
    for (size_t r = 0; r < domain.size(); ++r) {
      std::uint32_t f = domain[r];
      int sign = 1, position = 0;
      for (int v = 0; v < c.num_vertices(); ++v) {
        if (!(f & (1u << v))) continue;
        std::uint32_t sub = f & ~(1u << v);
        m[r][index_in_size.at(sub)] = (position % 2 == 0) ? sign : -sign;
        ++position;
      }
    }
    return rank_over_field(m, field);
  };

  std::vector<int> ranks(top + 2, 0);
  for (int k = 1; k <= top; ++k) ranks[k] = boundary_rank(k);

  for (int k = 0; k <= top; ++k) {
    // homological degree j = k - 1, chain dim = |faces of cardinality k|.
    long long dim = static_cast<long long>(by_size[k].size()) - ranks[k] -
                    ranks[k + 1];
    if (dim != 0) dims[k - 1] = dim;
  }
  return dims;
}

}  // namespace constdepth
