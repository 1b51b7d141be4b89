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

#include "constdepth/forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace constdepth {

namespace {

std::set<int> intersect_sets(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

bool subset_of(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Index of a leaf in the subcollection, or -1.
int find_leaf(const std::vector<std::set<int>>& facets) {
  int m = static_cast<int>(facets.size());
  if (m == 1) return 0;
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (g == f) continue;
      bool branch = true;
      for (int h = 0; h < m && branch; ++h) {
        if (h == f) continue;
        if (!subset_of(intersect_sets(facets[f], facets[h]),
                       intersect_sets(facets[f], facets[g])))
          branch = false;
      }
      if (branch) return f;
    }
  }
  return -1;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::set<int>> facet_list)
    : facets(std::move(facet_list)) {
  if (facets.empty())
    throw InvalidIdealInput("simplicial complex needs at least one facet");
  for (const auto& f : facets)
    if (f.empty()) throw InvalidIdealInput("empty facet");
  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = 0; j < facets.size(); ++j)
      if (i != j && subset_of(facets[i], facets[j]))
        throw InvalidIdealInput("facet list is not an antichain");
}

std::set<int> SimplicialComplex::vertex_set() const {
  std::set<int> out;
  for (const auto& f : facets) out.insert(f.begin(), f.end());
  return out;
}

int SimplicialComplex::dim() const {
  size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

MonomialIdeal facet_ideal(const SimplicialComplex& delta) {
  auto vertices = delta.vertex_set();
  std::vector<std::string> names;
  std::map<int, int> index;
  for (int v : vertices) {
    index[v] = static_cast<int>(names.size());
    names.push_back("x" + std::to_string(v));
  }
  auto ctx = make_context(names);
  std::vector<Monomial> gens;
  for (const auto& f : delta.facets) {
    ExpVec e(names.size(), 0);
    for (int v : f) e[index[v]] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ctx, gens);
}

std::vector<Leaf> leaves(const SimplicialComplex& delta) {
  std::vector<Leaf> out;
  int m = static_cast<int>(delta.facets.size());
  if (m == 1) {
    out.push_back({delta.facets[0], std::nullopt});
    return out;
  }
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (g == f) continue;
      bool branch = true;
      for (int h = 0; h < m && branch; ++h) {
        if (h == f) continue;
        if (!subset_of(intersect_sets(delta.facets[f], delta.facets[h]),
                       intersect_sets(delta.facets[f], delta.facets[g])))
          branch = false;
      }
      if (branch) {
        out.push_back({delta.facets[f], delta.facets[g]});
        break;
      }
    }
  }
  return out;
}

std::set<int> free_vertices(const SimplicialComplex& delta,
                            const std::set<int>& facet) {
  std::set<int> out;
  for (int v : facet) {
    int count = 0;
    for (const auto& f : delta.facets)
      if (f.count(v)) ++count;
    if (count == 1) out.insert(v);
  }
  return out;
}

bool is_forest(const SimplicialComplex& delta, int max_facets) {
  int m = static_cast<int>(delta.facets.size());
  if (m > max_facets)
    throw GuardExceeded("forest guard: " + std::to_string(m) +
                        " facets, limit " + std::to_string(max_facets));
  // Every nonempty subcollection must have a leaf. The leaf-order
  // shortcut characterizes a weaker class, so enumerate.
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::set<int>> sub;
    for (int f = 0; f < m; ++f)
      if (mask & (1u << f)) sub.push_back(delta.facets[f]);
    if (find_leaf(sub) < 0) return false;
  }
  return true;
}

bool is_pure(const SimplicialComplex& delta) {
  for (const auto& f : delta.facets)
    if (f.size() != delta.facets.front().size()) return false;
  return true;
}

std::vector<SimplicialComplex> components(const SimplicialComplex& delta) {
  int m = static_cast<int>(delta.facets.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!intersect_sets(delta.facets[i], delta.facets[j]).empty())
        parent[find(i)] = find(j);
  std::map<int, std::vector<std::set<int>>> groups;
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(delta.facets[i]);
  std::vector<SimplicialComplex> out;
  for (auto& [root, facets] : groups) out.emplace_back(std::move(facets));
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) {
              return *a.vertex_set().begin() < *b.vertex_set().begin();
            });
  return out;
}

bool connected_in_codim_one(const SimplicialComplex& delta) {
  if (!is_pure(delta))
    throw InvalidIdealInput("codimension-one connectivity needs a pure complex");
  int m = static_cast<int>(delta.facets.size());
  size_t d = delta.facets.front().size();  // = dim + 1
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (intersect_sets(delta.facets[i], delta.facets[j]).size() == d - 1)
        parent[find(i)] = find(j);
  for (int i = 1; i < m; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

ForestVerdict classify_forest(const SimplicialComplex& delta, int max_facets) {
  ForestVerdict verdict;
  if (!is_forest(delta, max_facets))
    verdict.failed_hypotheses.push_back("forest");
  if (!is_pure(delta)) verdict.failed_hypotheses.push_back("pure");
  if (is_pure(delta)) {
    for (const auto& comp : components(delta))
      if (!connected_in_codim_one(comp)) {
        verdict.failed_hypotheses.push_back("connected_in_codim_one");
        break;
      }
  }
  if (!verdict.failed_hypotheses.empty()) return verdict;  // NOT_APPLICABLE

  verdict.applicable = true;
  verdict.constant = true;
  for (const auto& comp : components(delta)) {
    MonomialIdeal ideal = facet_ideal(comp);
    Monomial u = gcd_of_gens(ideal);
    ForestComponentFactor factor{u.to_string(*ideal.context()), {}};
    if (comp.facets.size() == 1) {
      // a single facet is a product of principal primes
      verdict.presentation.push_back(std::move(factor));
      continue;
    }
    // I(Δ_i) = u·P demands every generator/u a distinct single variable.
    bool ok = true;
    std::set<int> vars;
    for (const auto& g : ideal.gens()) {
      Monomial q = g / u;
      auto supp = q.support();
      if (q.degree() != 1 || supp.size() != 1 || !vars.insert(supp[0]).second) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      verdict.constant = false;
      verdict.presentation.clear();
      break;
    }
    // report prime variables with the component's original labels
    for (int v : vars)
      factor.prime_vars.push_back(
          std::stoi(ideal.context()->var_name(v).substr(1)));
    verdict.presentation.push_back(std::move(factor));
  }
  return verdict;
}

SpreadResult spread_forest(const SimplicialComplex& delta, int max_facets) {
  if (!is_forest(delta, max_facets))
    throw InvalidIdealInput("spread_forest needs a simplicial forest");
  return {static_cast<int>(delta.facets.size()), SpreadMethod::forest_formula,
          Confidence::exact, 0};
}

}  // namespace constdepth
