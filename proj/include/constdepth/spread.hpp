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

#ifndef CONSTDEPTH_SPREAD_HPP
#define CONSTDEPTH_SPREAD_HPP

#include <optional>
#include <string>

#include "constdepth/monomial.hpp"

namespace constdepth {

enum class SpreadMethod {
  exponent_rank,
  mu_growth,
  edge_formula,
  matroidal_formula,
  forest_formula,
  disjoint_sum,
  disjoint_product,
};

enum class Confidence { exact, heuristic_lower_bound };

std::string to_string(SpreadMethod m);

// The analytic spread ℓ(I) together with how it was obtained.
struct SpreadResult {
  int value = 0;
  SpreadMethod method = SpreadMethod::exponent_rank;
  Confidence confidence = Confidence::exact;
  int k_max = 0;  // powers inspected, mu_growth only

  bool exact() const { return confidence == Confidence::exact; }
};

// Why the Rees ring of an ideal is known to be Cohen-Macaulay. Never
// inferred by computation; granted by class membership or user assertion.
enum class CMReason {
  matroidal,
  bipartite_edge,
  simplicial_forest,
  disjoint_sum_of_CM,
  disjoint_product_of_CM,
  prime_power_product,
};

std::string to_string(CMReason r);

struct ReesCMStatus {
  enum class Status { guaranteed_by_class, asserted_by_user, unknown };
  Status status = Status::unknown;
  std::optional<CMReason> reason;

  static ReesCMStatus unknown_status() { return {}; }
  static ReesCMStatus guaranteed(CMReason r) {
    return {Status::guaranteed_by_class, r};
  }
  static ReesCMStatus asserted() { return {Status::asserted_by_user, {}}; }

  bool granted() const { return status != Status::unknown; }
  std::string describe() const;
};

enum class Verdict { CONSTANT_FOR_ALL_POWERS, NOT_CONSTANT, EVIDENCE_ONLY };

std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::EVIDENCE_ONLY;
  SpreadMethod method = SpreadMethod::exponent_rank;
  std::string cm_basis;
  int n_minus_ell = -1;
  int depth1 = -1;
};

// ℓ(I) as the rank of the exponent matrix; exact for equigenerated ideals
// (their fiber ring is the toric ring on the generators).
SpreadResult spread_exponent_rank(const MonomialIdeal& I);

// ℓ(I) from the growth of k ↦ |G(I^k)| by successive differences; exact
// only if the leading difference has visibly stabilized.
SpreadResult spread_mu_growth(const MonomialIdeal& I, int k_max);

// ℓ(I+J) and ℓ(IJ) for ideals in disjoint sets of variables.
int spread_sum_disjoint(int ell_i, int ell_j);
int spread_product_disjoint(int ell_i, int ell_j);

// n - ℓ(I): upper bound for the limit depth. Heuristic spreads rejected.
int burch_bound(const MonomialIdeal& I, const SpreadResult& l);

// Constancy decision when Cohen-Macaulayness of the Rees ring is granted:
// constant iff depth S/I = n - ℓ(I). Without a grant: EVIDENCE_ONLY.
Certificate certify_constant(const MonomialIdeal& I, const ReesCMStatus& cm,
                             int depth1, const SpreadResult& l);

}  // namespace constdepth

#endif  // CONSTDEPTH_SPREAD_HPP
