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

#ifndef CONSTDEPTH_IO_HPP
#define CONSTDEPTH_IO_HPP

#include <string>

#include "json.hpp"

#include "constdepth/betti.hpp"
#include "constdepth/families.hpp"
#include "constdepth/forest.hpp"
#include "constdepth/graphs.hpp"
#include "constdepth/matroidal.hpp"
#include "constdepth/monomial.hpp"
#include "constdepth/spread.hpp"

namespace constdepth {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& message, int line, int column);
};

// Ideal files: a `vars: x1 x2 ...` header line, then comma-separated
// generators like `x1*x2^2, x3`. Blank lines and `#` comments allowed.
MonomialIdeal parse_ideal_input(const std::string& text,
                                FieldSpec field = FieldSpec::rationals());
std::string format_ideal(const MonomialIdeal& I);

// `graph: 1-2, 2-3, 1-3`
Graph parse_graph_input(const std::string& text);

// `complex: 1 2 3; 1 5; 3 4`
SimplicialComplex parse_complex_input(const std::string& text);

// `primes: {x1 x2} {x3}` (optional) and `collection: {1 2} {3}`.
struct FamilyInput {
  PrimeAssignment primes;
  SubsetCollection collection;
  ContextPtr ctx;  // null when no primes line was given
};
FamilyInput parse_family_input(const std::string& text,
                               FieldSpec field = FieldSpec::rationals());

// JSON report bodies.
nlohmann::json to_json(const DepthReport& report);
nlohmann::json to_json(const SpreadResult& result);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const EdgeVerdict& verdict);
nlohmann::json to_json(const MatroidalVerdict& verdict,
                       const PolyContext& ctx);
nlohmann::json to_json(const ForestVerdict& verdict);
nlohmann::json to_json(const FamilyMembership& membership);
nlohmann::json to_json(const ClassCResult& result, const PolyContext& ctx);

}  // namespace constdepth

#endif  // CONSTDEPTH_IO_HPP
