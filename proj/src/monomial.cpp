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

#include "constdepth/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace constdepth {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw std::overflow_error("monomial exponent overflow");
  return a + b;
}

void require_same_context(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(*I.context() == *J.context()))
    throw ContextMismatch("ideals live in different polynomial rings");
}

}  // namespace

FieldSpec FieldSpec::prime(long long p) {
  if (!is_prime(p))
    throw InvalidIdealInput("field characteristic must be prime, got " +
                            std::to_string(p));
  return FieldSpec{Kind::prime_field, p};
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

PolyContext::PolyContext(std::vector<std::string> var_names, FieldSpec field)
    : names_(std::move(var_names)), field_(field) {
  if (names_.empty())
    throw InvalidIdealInput("polynomial ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InvalidIdealInput("empty variable name");
    if (!seen.insert(name).second)
      throw InvalidIdealInput("duplicate variable name: " + name);
  }
}

int PolyContext::index_of(const std::string& name) const {
  for (int i = 0; i < num_vars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

ContextPtr make_context(std::vector<std::string> var_names, FieldSpec field) {
  return std::make_shared<PolyContext>(std::move(var_names), field);
}

ContextPtr make_context(int n, FieldSpec field) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_context(std::move(names), field);
}

// Monomial -------------------------------------------------------------

Monomial::Monomial(ExpVec exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw InvalidIdealInput("negative exponent in monomial");
}

Exponent Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < num_vars(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (num_vars() != other.num_vars())
    throw ContextMismatch("monomials of different lengths");
  for (int i = 0; i < num_vars(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatch("monomials of different lengths");
  ExpVec out(a.exps_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = checked_add(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(out));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a))
    throw InvalidIdealInput("inexact monomial division");
  ExpVec out(a.exps_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.exps_[i] - b.exps_[i];
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatch("monomials of different lengths");
  ExpVec out(a.exps_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ContextMismatch("monomials of different lengths");
  ExpVec out(a.exps_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(out));
}

std::string Monomial::to_string(const PolyContext& ctx) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < num_vars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << "*";
    os << ctx.var_name(i);
    if (exps_[i] > 1) os << "^" << exps_[i];
    first = false;
  }
  return os.str();
}

Monomial one_monomial(int n) { return Monomial(ExpVec(n, 0)); }

Monomial variable_monomial(int n, int i) {
  ExpVec e(n, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

// MonomialIdeal --------------------------------------------------------

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  if (!ctx_) throw InvalidIdealInput("null context");
  for (const auto& g : gens_)
    if (g.num_vars() != ctx_->num_vars())
      throw ContextMismatch("generator length does not match context");
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return *ctx_ == *other.ctx_ && gens_ == other.gens_;
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string(*ctx_);
  }
  os << ")";
  return os.str();
}

MonomialIdeal zero_ideal(ContextPtr ctx) { return MonomialIdeal(ctx, {}); }

MonomialIdeal unit_ideal(ContextPtr ctx) {
  int n = ctx->num_vars();
  return MonomialIdeal(ctx, {one_monomial(n)});
}

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  // A duplicate-free set where two elements divide each other cannot occur,
  // so only proper divisors were removed above; if 1 survives it is the
  // unique minimal generator.
  return MonomialIdeal(std::move(ctx), std::move(minimal));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J);
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return minimalize(I.context(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J);
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.context());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& u : I.gens())
    for (const auto& v : J.gens()) gens.push_back(u * v);
  return minimalize(I.context(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_context(I, J);
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.context());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& u : I.gens())
    for (const auto& v : J.gens()) gens.push_back(lcm(u, v));
  return minimalize(I.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(g / gcd(g, m));
  return minimalize(I.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw InvalidIdealInput("ideal power requires k >= 1");
  MonomialIdeal result = I;
  for (int i = 1; i < k; ++i) result = product(result, I);
  return result;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    ExpVec e = g.exps();
    for (auto& x : e) x = std::min<Exponent>(x, 1);
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.context(), std::move(gens));
}

std::set<int> support(const MonomialIdeal& I) {
  std::set<int> out;
  for (const auto& g : I.gens())
    for (int i : g.support()) out.insert(i);
  return out;
}

Monomial gcd_of_gens(const MonomialIdeal& I) {
  if (I.is_zero())
    throw InvalidIdealInput("gcd of generators undefined for the zero ideal");
  Monomial g = I.gens().front();
  for (size_t i = 1; i < I.gens().size(); ++i) g = gcd(g, I.gens()[i]);
  return g;
}

std::optional<Exponent> is_equigenerated(const MonomialIdeal& I) {
  if (I.is_zero()) return std::nullopt;
  Exponent d = I.gens().front().degree();
  for (const auto& g : I.gens())
    if (g.degree() != d) return std::nullopt;
  return d;
}

std::vector<MonomialIdeal> variable_disjoint_blocks(const MonomialIdeal& I) {
  const auto& gens = I.gens();
  int m = static_cast<int>(gens.size());
  // Union-find over generators, joined when supports meet.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!gcd(gens[i], gens[j]).is_one()) parent[find(i)] = find(j);
    }
  std::vector<std::vector<Monomial>> groups;
  std::vector<int> root_index(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[root_index[r]].push_back(gens[i]);
  }
  std::vector<MonomialIdeal> blocks;
  blocks.reserve(groups.size());
  for (auto& g : groups) blocks.emplace_back(I.context(), std::move(g));
  auto least_var = [](const MonomialIdeal& b) {
    auto s = support(b);
    return s.empty() ? std::numeric_limits<int>::max() : *s.begin();
  };
  std::sort(blocks.begin(), blocks.end(),
            [&](const MonomialIdeal& a, const MonomialIdeal& b) {
              return least_var(a) < least_var(b);
            });
  return blocks;
}

bool supports_disjoint(const MonomialIdeal& I, const MonomialIdeal& J) {
  auto sI = support(I);
  for (int v : support(J))
    if (sI.count(v)) return false;
  return true;
}

}  // namespace constdepth
