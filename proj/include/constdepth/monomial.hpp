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

#ifndef CONSTDEPTH_MONOMIAL_HPP
#define CONSTDEPTH_MONOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace constdepth {

// Errors ---------------------------------------------------------------

struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidIdealInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// Field / context ------------------------------------------------------

struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  long long p = 0;  // characteristic when kind == prime_field

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(long long p);

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

// The ambient polynomial ring: n variables over a field.
class PolyContext {
 public:
  PolyContext(std::vector<std::string> var_names,
              FieldSpec field = FieldSpec::rationals());

  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }
  const FieldSpec& field() const { return field_; }

  // Index of a variable name, or -1 if unknown.
  int index_of(const std::string& name) const;

  bool operator==(const PolyContext& other) const {
    return names_ == other.names_ && field_ == other.field_;
  }

 private:
  std::vector<std::string> names_;
  FieldSpec field_;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr make_context(std::vector<std::string> var_names,
                        FieldSpec field = FieldSpec::rationals());
// Convenience: variables x1..xn.
ContextPtr make_context(int n, FieldSpec field = FieldSpec::rationals());

// Monomial -------------------------------------------------------------

using Exponent = long long;
using ExpVec = std::vector<Exponent>;

// A monomial x^a, represented by its exponent vector. The zero vector is
// the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(ExpVec exps);

  const ExpVec& exps() const { return exps_; }
  Exponent exp(int i) const { return exps_.at(i); }
  int num_vars() const { return static_cast<int>(exps_.size()); }

  Exponent degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact division; throws InvalidIdealInput if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  // Lexicographic order on exponent vectors; canonical generator order.
  bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

  std::string to_string(const PolyContext& ctx) const;

 private:
  ExpVec exps_;
};

Monomial one_monomial(int n);
Monomial variable_monomial(int n, int i);

// MonomialIdeal --------------------------------------------------------

// A monomial ideal given by its minimal generating set, kept sorted
// lexicographically. The empty generating set is the zero ideal; the
// generating set {1} is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  int num_vars() const { return ctx_->num_vars(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;

  // Membership: some minimal generator divides m.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& other) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

MonomialIdeal zero_ideal(ContextPtr ctx);
MonomialIdeal unit_ideal(ContextPtr ctx);

// Reduce a generating set to the divisibility antichain, sorted.
MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal power(const MonomialIdeal& I, int k);
MonomialIdeal radical(const MonomialIdeal& I);

// Union of the generator supports, as variable indices.
std::set<int> support(const MonomialIdeal& I);
// gcd of the minimal generators; throws on the zero ideal.
Monomial gcd_of_gens(const MonomialIdeal& I);
// Common degree if all generators share one.
std::optional<Exponent> is_equigenerated(const MonomialIdeal& I);
// Partition of G(I) into maximal variable-disjoint groups, each returned
// as an ideal over the same context. Blocks ordered by least variable.
std::vector<MonomialIdeal> variable_disjoint_blocks(const MonomialIdeal& I);

bool supports_disjoint(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace constdepth

#endif  // CONSTDEPTH_MONOMIAL_HPP
