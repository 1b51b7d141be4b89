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

#ifndef CONSTDEPTH_GRAPHS_HPP
#define CONSTDEPTH_GRAPHS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constdepth/monomial.hpp"
#include "constdepth/spread.hpp"

namespace constdepth {

// A finite simple graph on integer-labelled vertices.
struct Graph {
  std::set<int> vertices;
  std::set<std::pair<int, int>> edges;  // pairs stored with first < second

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  std::vector<int> neighbors(int v) const;
};

struct Bipartition {
  std::set<int> part1;
  std::set<int> part2;
};

// Edge ideal over x_v for the vertices of G (0-based dense relabelling in
// vertex order); throws on an empty edge set.
MonomialIdeal edge_ideal(const Graph& g);

Graph strip_isolated(const Graph& g);
std::vector<Graph> components(const Graph& g);
std::optional<Bipartition> is_bipartite(const Graph& g);
// Requires a connected graph.
bool is_complete_bipartite(const Graph& g);

// ℓ(I(G)) = |V(G)| - (number of bipartite components); no isolated
// vertices allowed.
SpreadResult spread_edge(const Graph& g);

struct EdgeComponentInfo {
  std::vector<int> vertices;
  bool bipartite = false;
  bool complete_bipartite = false;
  std::string witness;  // why the component fails, when it does
  Bipartition parts;    // filled when bipartite
};

struct EdgeVerdict {
  bool constant = false;
  std::vector<int> stripped;  // isolated vertices removed first
  std::vector<EdgeComponentInfo> component_info;
  std::string witness;
  // When constant: one (part1)(part2) transversal factor per component.
  std::vector<Bipartition> factorization;
};

// Constant depth function iff every component of the stripped graph is
// complete bipartite; purely combinatorial, no depth engine involved.
EdgeVerdict classify_edge_ideal(const Graph& g);

// Handy builders for tests and corpora.
Graph complete_bipartite_graph(int m, int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace constdepth

#endif  // CONSTDEPTH_GRAPHS_HPP
