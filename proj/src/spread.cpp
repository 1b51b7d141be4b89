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

#include "constdepth/spread.hpp"

#include <vector>

#include "constdepth/linalg.hpp"

namespace constdepth {

std::string to_string(SpreadMethod m) {
  switch (m) {
    case SpreadMethod::exponent_rank: return "exponent_rank";
    case SpreadMethod::mu_growth: return "mu_growth";
    case SpreadMethod::edge_formula: return "edge_formula";
    case SpreadMethod::matroidal_formula: return "matroidal_formula";
    case SpreadMethod::forest_formula: return "forest_formula";
    case SpreadMethod::disjoint_sum: return "disjoint_sum";
    case SpreadMethod::disjoint_product: return "disjoint_product";
  }
  return "?";
}

std::string to_string(CMReason r) {
  switch (r) {
    case CMReason::matroidal: return "matroidal";
    case CMReason::bipartite_edge: return "bipartite_edge";
    case CMReason::simplicial_forest: return "simplicial_forest";
    case CMReason::disjoint_sum_of_CM: return "disjoint_sum_of_CM";
    case CMReason::disjoint_product_of_CM: return "disjoint_product_of_CM";
    case CMReason::prime_power_product: return "prime_power_product";
  }
  return "?";
}

std::string ReesCMStatus::describe() const {
  switch (status) {
    case Status::guaranteed_by_class:
      return "guaranteed_by_class:" + to_string(*reason);
    case Status::asserted_by_user: return "asserted_by_user";
    case Status::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CONSTANT_FOR_ALL_POWERS: return "CONSTANT_FOR_ALL_POWERS";
    case Verdict::NOT_CONSTANT: return "NOT_CONSTANT";
    case Verdict::EVIDENCE_ONLY: return "EVIDENCE_ONLY";
  }
  return "?";
}

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw InvalidIdealInput("spread is defined for proper nonzero ideals");
}

}  // namespace

SpreadResult spread_exponent_rank(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  if (!is_equigenerated(I))
    throw InvalidIdealInput(
        "spread_exponent_rank requires an equigenerated ideal");
  IntMatrix m;
  m.reserve(I.num_gens());
  for (const auto& g : I.gens())
    m.emplace_back(g.exps().begin(), g.exps().end());
  return {rank_over_rationals(m), SpreadMethod::exponent_rank,
          Confidence::exact, 0};
}

SpreadResult spread_mu_growth(const MonomialIdeal& I, int k_max) {
  require_proper_nonzero(I);
  if (k_max < 3) throw InvalidIdealInput("spread_mu_growth requires k_max >= 3");

  // H(k) = |G(I^k)|, the Hilbert function of the fiber ring; ℓ(I) is one
  // more than the degree of its Hilbert polynomial.
  std::vector<long long> row{1};
  MonomialIdeal pk = I;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) pk = product(pk, I);
    row.push_back(pk.num_gens());
  }

  for (int d = 0; d <= k_max; ++d) {
    auto tail_equal = [&](int count) {
      int len = static_cast<int>(row.size());
      if (len < count) return false;
      for (int i = len - count; i < len; ++i)
        if (row[i] != row[len - 1]) return false;
      return true;
    };
    if (tail_equal(3))
      return {d + 1, SpreadMethod::mu_growth, Confidence::exact, k_max};
    if (row.size() < 3) {
      // Ran out of data before the differences settled.
      int guess = row.size() == 2 && row[0] != row[1] ? d + 2 : d + 1;
      return {guess, SpreadMethod::mu_growth, Confidence::heuristic_lower_bound,
              k_max};
    }
    std::vector<long long> diff;
    for (size_t i = 1; i < row.size(); ++i) diff.push_back(row[i] - row[i - 1]);
    row = std::move(diff);
  }
  return {k_max + 1, SpreadMethod::mu_growth, Confidence::heuristic_lower_bound,
          k_max};
}

int spread_sum_disjoint(int ell_i, int ell_j) { return ell_i + ell_j; }

int spread_product_disjoint(int ell_i, int ell_j) {
  return ell_i + ell_j - 1;
}

int burch_bound(const MonomialIdeal& I, const SpreadResult& l) {
  if (!l.exact())
    throw InvalidIdealInput("burch_bound needs an exact analytic spread");
  return I.num_vars() - l.value;
}

Certificate certify_constant(const MonomialIdeal& I, const ReesCMStatus& cm,
                             int depth1, const SpreadResult& l) {
  if (!l.exact())
    throw InvalidIdealInput("certify_constant needs an exact analytic spread");
  Certificate cert;
  cert.method = l.method;
  cert.cm_basis = cm.describe();
  cert.n_minus_ell = I.num_vars() - l.value;
  cert.depth1 = depth1;
  if (!cm.granted()) {
    cert.verdict = Verdict::EVIDENCE_ONLY;
    return cert;
  }
  if (depth1 < cert.n_minus_ell)
    throw InternalInconsistency(
        "depth S/I below n-ℓ(I) despite a Cohen-Macaulay Rees ring");
  cert.verdict = depth1 == cert.n_minus_ell ? Verdict::CONSTANT_FOR_ALL_POWERS
                                            : Verdict::NOT_CONSTANT;
  return cert;
}

}  // namespace constdepth
