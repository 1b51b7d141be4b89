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

#ifndef CONSTDEPTH_LINALG_HPP
#define CONSTDEPTH_LINALG_HPP

#include <vector>

#include "constdepth/monomial.hpp"

namespace constdepth {

// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<long long>>;

// Exact rank over the rationals, by fraction-free (Bareiss) elimination
// on arbitrary-precision integers.
int rank_over_rationals(const IntMatrix& m);

// Exact rank over the prime field F_p.
int rank_mod_p(const IntMatrix& m, long long p);

// Rank over the field named by the spec.
int rank_over_field(const IntMatrix& m, const FieldSpec& field);

}  // namespace constdepth

#endif  // CONSTDEPTH_LINALG_HPP
