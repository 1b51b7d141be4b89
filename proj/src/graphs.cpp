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

#include "constdepth/graphs.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace constdepth {

void Graph::add_edge(int a, int b) {
  if (a == b) throw InvalidIdealInput("loops are not allowed");
  vertices.insert(a);
  vertices.insert(b);
  edges.insert({std::min(a, b), std::max(a, b)});
}

bool Graph::has_edge(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edges.empty())
    throw InvalidIdealInput("edge ideal of an edgeless graph");
  std::vector<std::string> names;
  std::map<int, int> index;
  for (int v : g.vertices) {
    index[v] = static_cast<int>(names.size());
    names.push_back("x" + std::to_string(v));
  }
  auto ctx = make_context(names);
  std::vector<Monomial> gens;
  for (const auto& [a, b] : g.edges) {
    ExpVec e(names.size(), 0);
    e[index[a]] = e[index[b]] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ctx, gens);
}

Graph strip_isolated(const Graph& g) {
  Graph out;
  out.edges = g.edges;
  for (const auto& [a, b] : g.edges) {
    out.vertices.insert(a);
    out.vertices.insert(b);
  }
  return out;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  std::set<int> seen;
  for (int start : g.vertices) {
    if (seen.count(start)) continue;
    Graph comp;
    std::queue<int> frontier;
    frontier.push(start);
    seen.insert(start);
    comp.vertices.insert(start);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        comp.add_edge(v, w);
        if (seen.insert(w).second) frontier.push(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::map<int, int> color;
  for (int start : g.vertices) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          frontier.push(w);
        } else if (it->second == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (const auto& [v, c] : color)
    (c == 0 ? parts.part1 : parts.part2).insert(v);
  return parts;
}

bool is_complete_bipartite(const Graph& g) {
  if (components(g).size() != 1) return false;
  auto parts = is_bipartite(g);
  if (!parts) return false;
  return g.edges.size() == parts->part1.size() * parts->part2.size();
}

SpreadResult spread_edge(const Graph& g) {
  for (int v : g.vertices)
    if (g.neighbors(v).empty())
      throw InvalidIdealInput("spread_edge: isolated vertex " +
                              std::to_string(v));
  int bipartite_components = 0;
  for (const auto& comp : components(g))
    if (is_bipartite(comp)) ++bipartite_components;
  return {static_cast<int>(g.vertices.size()) - bipartite_components,
          SpreadMethod::edge_formula, Confidence::exact, 0};
}

EdgeVerdict classify_edge_ideal(const Graph& g) {
  if (g.edges.empty())
    throw InvalidIdealInput("classify_edge_ideal: edgeless graph");
  EdgeVerdict verdict;
  Graph stripped = strip_isolated(g);
  for (int v : g.vertices)
    if (!stripped.vertices.count(v)) verdict.stripped.push_back(v);

  verdict.constant = true;
  for (const auto& comp : components(stripped)) {
    EdgeComponentInfo info;
    info.vertices.assign(comp.vertices.begin(), comp.vertices.end());
    auto parts = is_bipartite(comp);
    info.bipartite = parts.has_value();
    if (!parts) {
      info.witness = "odd cycle";
    } else {
      info.parts = *parts;
      info.complete_bipartite =
          comp.edges.size() == parts->part1.size() * parts->part2.size();
      if (!info.complete_bipartite) info.witness = "missing cross edge";
    }
    if (info.complete_bipartite) {
      verdict.factorization.push_back(info.parts);
    } else {
      verdict.constant = false;
      if (verdict.witness.empty())
        verdict.witness = "component {" +
                          std::to_string(info.vertices.front()) + ",...}: " +
                          info.witness;
    }
    verdict.component_info.push_back(std::move(info));
  }
  if (!verdict.constant) verdict.factorization.clear();
  return verdict;
}

Graph complete_bipartite_graph(int m, int n) {
  Graph g;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) g.add_edge(i, m + j);
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

Graph path_graph(int n) {
  Graph g;
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace constdepth
