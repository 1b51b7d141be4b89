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

#include "constdepth/betti.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <thread>

#include "constdepth/linalg.hpp"

namespace constdepth {

namespace {

void require_proper_nonzero(const MonomialIdeal& I, const char* what) {
  if (I.is_zero())
    throw InvalidIdealInput(std::string(what) + ": zero ideal");
  if (I.is_unit())
    throw InvalidIdealInput(std::string(what) + ": unit ideal");
}

}  // namespace

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) t += value;
  return t;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, value] : entries) m = std::max(m, key.first);
  return m;
}

std::vector<ExpVec> lcm_lattice_degrees(const MonomialIdeal& I,
                                        const Guards& guards) {
  require_proper_nonzero(I, "lcm_lattice_degrees");
  if (I.num_gens() > guards.lcm_max_gens)
    throw GuardExceeded("lcm lattice guard: " + std::to_string(I.num_gens()) +
                        " generators, limit " +
                        std::to_string(guards.lcm_max_gens));
  // Incremental closure under pairwise lcm; far cheaper than enumerating
  // all 2^m subsets when many subsets share an lcm.
  std::set<ExpVec> lattice;
  for (const auto& g : I.gens()) {
    std::vector<ExpVec> fresh;
    fresh.push_back(g.exps());
    for (const auto& old : lattice) {
      ExpVec join(old.size());
      for (size_t i = 0; i < join.size(); ++i)
        join[i] = std::max(old[i], g.exps()[i]);
      fresh.push_back(std::move(join));
    }
    lattice.insert(fresh.begin(), fresh.end());
  }
  return {lattice.begin(), lattice.end()};
}

AbstractComplex upper_koszul(const MonomialIdeal& I, const ExpVec& a) {
  if (static_cast<int>(a.size()) != I.num_vars())
    throw ContextMismatch("multidegree length does not match context");
  for (Exponent e : a)
    if (e < 0) throw InvalidIdealInput("negative multidegree");
  std::vector<int> vertices;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) vertices.push_back(static_cast<int>(i));
  if (vertices.size() >= 32)
    throw GuardExceeded("upper Koszul support too large for bitmask faces");

  std::vector<std::uint32_t> faces;
  for (std::uint32_t mask = 0; mask < (1u << vertices.size()); ++mask) {
    ExpVec b = a;
    for (size_t v = 0; v < vertices.size(); ++v)
      if (mask & (1u << v)) --b[vertices[v]];
    if (I.contains(Monomial(b))) faces.push_back(mask);
  }
  return complex_from_faces(std::move(vertices), faces);
}

namespace {

// Betti numbers contributed at one multidegree via upper Koszul homology.
std::map<int, long long> koszul_strand(const MonomialIdeal& I, const ExpVec& a,
                                       const Guards& guards) {
  auto complex = upper_koszul(I, a);
  auto hom = reduced_homology_dims(complex, I.context()->field(),
                                   guards.homology_max_vertices);
  std::map<int, long long> betti;
  for (const auto& [j, dim] : hom)
    if (j + 1 >= 0) betti[j + 1] = dim;  // β_{i,a}(I) = dim H̃_{i-1}
  return betti;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const Guards& guards) {
  require_proper_nonzero(I, "betti_table");
  auto degrees = lcm_lattice_degrees(I, guards);
  BettiTable table;
  table.field = I.context()->field();

  std::vector<std::map<int, long long>> strands(degrees.size());
  int jobs = std::max(1, guards.jobs);
  if (jobs == 1 || degrees.size() < 2) {
    for (size_t d = 0; d < degrees.size(); ++d)
      strands[d] = koszul_strand(I, degrees[d], guards);
  } else {
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (size_t d = w; d < degrees.size(); d += jobs)
            strands[d] = koszul_strand(I, degrees[d], guards);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Deterministic merge: degrees are already sorted.
  for (size_t d = 0; d < degrees.size(); ++d)
    for (const auto& [i, dim] : strands[d])
      table.entries[{i, degrees[d]}] = dim;
  return table;
}

BettiTable taylor_betti_oracle(const MonomialIdeal& I, const Guards& guards) {
  require_proper_nonzero(I, "taylor_betti_oracle");
  int m = I.num_gens();
  if (m > guards.taylor_max_gens)
    throw GuardExceeded("Taylor guard: " + std::to_string(m) +
                        " generators, limit " +
                        std::to_string(guards.taylor_max_gens));
  const auto& gens = I.gens();

  // lcm of every subset of G(I), indexed by bitmask.
  std::vector<ExpVec> subset_lcm(1u << m, ExpVec(I.num_vars(), 0));
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int low = std::countr_zero(mask);
    const ExpVec& rest = subset_lcm[mask & (mask - 1)];
    const ExpVec& g = gens[low].exps();
    ExpVec& out = subset_lcm[mask];
    for (int i = 0; i < I.num_vars(); ++i) out[i] = std::max(rest[i], g[i]);
  }

  // Group subsets into strands by their lcm.
  std::map<ExpVec, std::vector<std::uint32_t>> strands;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask)
    strands[subset_lcm[mask]].push_back(mask);

  BettiTable table;
  table.field = I.context()->field();
  for (const auto& [a, subsets] : strands) {
    std::vector<std::vector<std::uint32_t>> by_size(m + 1);
    std::map<std::uint32_t, int> index_in_size;
    for (std::uint32_t f : subsets) by_size[std::popcount(f)].push_back(f);
    for (auto& level : by_size) {
      std::sort(level.begin(), level.end());
      for (size_t i = 0; i < level.size(); ++i)
        index_in_size[level[i]] = static_cast<int>(i);
    }

    // ∂_k sends a k-subset F to ± (F \ {g}); the term survives exactly
    // when dropping g preserves the lcm (otherwise the target basis
    // element lives in a different strand).
    auto boundary_rank = [&](int k) -> int {
      if (k < 2 || k > m) return 0;
      const auto& domain = by_size[k];
      const auto& codomain = by_size[k - 1];
      if (domain.empty() || codomain.empty()) return 0;
      IntMatrix mat(domain.size(), std::vector<long long>(codomain.size(), 0));
      for (size_t r = 0; r < domain.size(); ++r) {
        std::uint32_t f = domain[r];
        int position = 0;
        for (int g = 0; g < m; ++g) {
          if (!(f & (1u << g))) continue;
          std::uint32_t sub = f & ~(1u << g);
          if (subset_lcm[sub] == a)
            mat[r][index_in_size.at(sub)] = (position % 2 == 0) ? 1 : -1;
          ++position;
        }
      }
      return rank_over_field(mat, table.field);
    };

    std::vector<int> ranks(m + 2, 0);
    for (int k = 2; k <= m; ++k) ranks[k] = boundary_rank(k);
    for (int k = 1; k <= m; ++k) {
      long long dim = static_cast<long long>(by_size[k].size()) - ranks[k] -
                      ranks[k + 1];
      if (dim != 0) table.entries[{k - 1, a}] = dim;  // β_{i,a}(I), i = k-1
    }
  }
  return table;
}

int proj_dim_quotient(const BettiTable& t) { return 1 + t.max_index(); }

int depth(const MonomialIdeal& I, const Guards& guards) {
  if (I.is_zero()) return I.num_vars();  // depth S/0 = n by convention
  if (I.is_unit())
    throw InvalidIdealInput("depth: unit ideal rejected");
  return I.num_vars() - proj_dim_quotient(betti_table(I, guards));
}

DepthReport depth_series(const MonomialIdeal& I, int k_max,
                         const Guards& guards) {
  require_proper_nonzero(I, "depth_series");
  if (k_max < 1) throw InvalidIdealInput("depth_series requires k_max >= 1");
  DepthReport report{I};
  report.field = I.context()->field();
  MonomialIdeal pk = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) pk = product(pk, I);
    try {
      report.series.push_back(depth(pk, guards));
    } catch (const GuardExceeded& e) {
      throw GuardExceeded("power k=" + std::to_string(k) + ": " + e.what());
    }
  }
  report.depth = report.series.front();
  report.proj_dim = I.num_vars() - report.depth;
  report.constant_up_to = 1;
  while (report.constant_up_to < static_cast<int>(report.series.size()) &&
         report.series[report.constant_up_to] == report.series.front())
    ++report.constant_up_to;
  return report;
}

}  // namespace constdepth
