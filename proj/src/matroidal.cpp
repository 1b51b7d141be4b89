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

#include "constdepth/matroidal.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace constdepth {

namespace {

void require_matroidal_input(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw InvalidIdealInput("matroidal check needs a proper nonzero ideal");
  if (!I.is_squarefree())
    throw InvalidIdealInput("matroidal check needs a squarefree ideal");
  if (!is_equigenerated(I))
    throw InvalidIdealInput("matroidal check needs an equigenerated ideal");
}

// Restrict an ideal to the polynomial ring on its own support; returns
// the restricted ideal plus the support map (new index -> old index).
std::pair<MonomialIdeal, std::vector<int>> restrict_to_support(
    const MonomialIdeal& I) {
  auto supp = support(I);
  std::vector<int> old_index(supp.begin(), supp.end());
  std::vector<std::string> names;
  names.reserve(old_index.size());
  for (int v : old_index) names.push_back(I.context()->var_name(v));
  auto ctx = make_context(names);
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    ExpVec e(old_index.size());
    for (size_t i = 0; i < old_index.size(); ++i) e[i] = g.exp(old_index[i]);
    gens.emplace_back(std::move(e));
  }
  return {MonomialIdeal(ctx, gens), old_index};
}

}  // namespace

MatroidalCheck is_matroidal(const MonomialIdeal& I) {
  require_matroidal_input(I);
  const auto& gens = I.gens();
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (u == v) continue;
      for (int i : u.support()) {
        if (v.exp(i) > 0) continue;
        bool exchanged = false;
        for (int j : v.support()) {
          if (u.exp(j) > 0) continue;
          Monomial swapped =
              (u / variable_monomial(I.num_vars(), i)) *
              variable_monomial(I.num_vars(), j);
          if (std::binary_search(gens.begin(), gens.end(), swapped)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return {false, ExchangeWitness{u, v, i}};
      }
    }
  return {true, std::nullopt};
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw InvalidIdealInput("linear relation graph needs a proper nonzero ideal");
  LinearRelationGraph graph;
  const auto& gens = I.gens();
  // x_i u_k = x_j u_l means the exponent vectors differ by e_i - e_j.
  for (size_t k = 0; k < gens.size(); ++k)
    for (size_t l = k + 1; l < gens.size(); ++l) {
      int plus = -1, minus = -1, diffs = 0;
      for (int v = 0; v < I.num_vars(); ++v) {
        Exponent d = gens[k].exp(v) - gens[l].exp(v);
        if (d == 0) continue;
        if (d == 1 && plus < 0)
          plus = v;
        else if (d == -1 && minus < 0)
          minus = v;
        else {
          diffs = 3;
          break;
        }
        ++diffs;
      }
      if (diffs == 2 && plus >= 0 && minus >= 0) {
        graph.vertices.insert(plus);
        graph.vertices.insert(minus);
        graph.edges.insert({std::min(plus, minus), std::max(plus, minus)});
      }
    }

  // connected components, ordered by least contained variable
  std::map<int, int> comp_of;
  for (int v : graph.vertices) comp_of[v] = -1;
  int next = 0;
  for (int v : graph.vertices) {
    if (comp_of[v] >= 0) continue;
    std::vector<int> stack{v};
    comp_of[v] = next;
    graph.components.emplace_back();
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      graph.components[next].insert(cur);
      for (const auto& [a, b] : graph.edges) {
        int other = a == cur ? b : (b == cur ? a : -1);
        if (other >= 0 && comp_of[other] < 0) {
          comp_of[other] = next;
          stack.push_back(other);
        }
      }
    }
    ++next;
  }
  graph.r = static_cast<int>(graph.vertices.size());
  graph.s = static_cast<int>(graph.components.size());
  return graph;
}

MatroidalVerdict classify_matroidal(const MonomialIdeal& I) {
  MatroidalVerdict verdict;
  auto check = is_matroidal(I);
  verdict.matroidal = check.matroidal;
  verdict.witness = check.witness;
  if (!check.matroidal) return verdict;

  // Normalize: divide out gcd(I), then restrict to the support. The
  // classification applies to the normalized ideal.
  Monomial g = gcd_of_gens(I);
  verdict.normalized_by_gcd = g;
  std::vector<Monomial> divided;
  for (const auto& u : I.gens()) divided.push_back(u / g);
  MonomialIdeal stripped = minimalize(I.context(), divided);
  if (stripped.is_unit()) {
    // Principal ideal: degree 0 after normalization; trivially constant.
    verdict.d = 0;
    verdict.constant = true;
    for (int v = 0; v < I.num_vars(); ++v) verdict.dropped_variables.push_back(v);
    return verdict;
  }
  auto [normalized, old_index] = restrict_to_support(stripped);
  for (int v = 0; v < I.num_vars(); ++v)
    if (std::find(old_index.begin(), old_index.end(), v) == old_index.end())
      verdict.dropped_variables.push_back(v);

  verdict.d = static_cast<int>(*is_equigenerated(normalized));
  auto graph = linear_relation_graph(normalized);
  verdict.r = graph.r;
  verdict.s = graph.s;
  if (graph.s > verdict.d)
    throw InternalInconsistency("linear relation graph has s > d");
  if (graph.r != normalized.num_vars())
    throw InternalInconsistency(
        "normalized matroidal ideal with V(Γ) smaller than the support");

  verdict.constant = graph.s == verdict.d;
  if (!verdict.constant) return verdict;

  // Factors are the vertex sets of the Γ components; verify by expansion.
  MonomialIdeal expansion = unit_ideal(normalized.context());
  for (const auto& comp : graph.components) {
    std::vector<Monomial> prime_gens;
    for (int v : comp)
      prime_gens.push_back(variable_monomial(normalized.num_vars(), v));
    expansion =
        product(expansion, MonomialIdeal(normalized.context(), prime_gens));
    // containment I ⊂ P for every component
    for (const auto& u : normalized.gens()) {
      bool meets = std::any_of(comp.begin(), comp.end(),
                               [&](int v) { return u.exp(v) > 0; });
      if (!meets)
        throw InternalInconsistency(
            "generator avoids a linear-relation component");
    }
  }
  if (!(expansion == normalized))
    throw InternalInconsistency(
        "component factorization fails to reproduce the ideal");
  for (const auto& comp : graph.components) {
    std::vector<int> factor;
    for (int v : comp) factor.push_back(old_index[v]);
    verdict.factors.push_back(std::move(factor));
  }
  return verdict;
}

int depth_formula_matroidal(const MonomialIdeal& I) {
  auto check = is_matroidal(I);
  if (!check.matroidal)
    throw InvalidIdealInput("depth formula needs a matroidal ideal");
  return static_cast<int>(*is_equigenerated(I)) - 1;
}

SpreadResult spread_matroidal(const MonomialIdeal& I) {
  auto check = is_matroidal(I);
  if (!check.matroidal)
    throw InvalidIdealInput("spread_matroidal needs a matroidal ideal");
  auto graph = linear_relation_graph(I);
  return {graph.r - graph.s + 1, SpreadMethod::matroidal_formula,
          Confidence::exact, 0};
}

}  // namespace constdepth
