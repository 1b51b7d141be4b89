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

#include "constdepth/families.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace constdepth {

void PrimeAssignment::validate(int num_vars) const {
  std::set<int> seen;
  for (const auto& prime : primes) {
    if (prime.empty()) throw InvalidIdealInput("empty prime in assignment");
    for (int v : prime) {
      if (v < 0 || v >= num_vars)
        throw InvalidIdealInput("prime variable index out of range");
      if (!seen.insert(v).second)
        throw InvalidIdealInput("primes are not pairwise disjoint");
    }
  }
}

void SubsetCollection::validate() const {
  for (const auto& a : subsets) {
    if (a.empty())
      throw InvalidIdealInput("collection members must be nonempty");
    for (int j : a)
      if (j < 1 || j > s)
        throw InvalidIdealInput("collection index outside [s]");
  }
}

namespace {

using Canonical = std::vector<std::vector<int>>;

Canonical canonical_form(const std::vector<std::set<int>>& subsets) {
  Canonical out;
  out.reserve(subsets.size());
  for (const auto& a : subsets) out.emplace_back(a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct Decision {
  int chosen_j = 0;  // 0 when accepted by the singleton/empty base case
  bool dropped_empty = false;
  Canonical derived_in;   // the A(j) side after removing j
  Canonical derived_out;  // the untouched side
};

struct Memo {
  std::map<Canonical, std::optional<Decision>> table;
};

bool decide(const Canonical& collection, Memo& memo);

bool all_singletons(const Canonical& collection) {
  return std::all_of(collection.begin(), collection.end(),
                     [](const std::vector<int>& a) { return a.size() == 1; });
}

bool decide(const Canonical& collection, Memo& memo) {
  auto it = memo.table.find(collection);
  if (it != memo.table.end()) return it->second.has_value();

  if (collection.empty() || all_singletons(collection)) {
    memo.table[collection] = Decision{};
    return true;
  }

  std::set<int> labels;
  for (const auto& a : collection) labels.insert(a.begin(), a.end());
  // Pre-mark as rejected to cut cycles; overwritten on success.
  memo.table[collection] = std::nullopt;

  for (int j : labels) {
    Canonical derived_in, derived_out;
    std::set<int> union_in, union_out;
    bool dropped = false;
    for (const auto& a : collection) {
      if (std::binary_search(a.begin(), a.end(), j)) {
        std::vector<int> rest;
        for (int x : a)
          if (x != j) rest.push_back(x);
        union_in.insert(rest.begin(), rest.end());
        if (rest.empty())
          dropped = true;  // member collapsed to the empty set; drop & log
        else
          derived_in.push_back(std::move(rest));
      } else {
        union_out.insert(a.begin(), a.end());
        derived_out.push_back(a);
      }
    }
    bool disjoint = std::none_of(union_in.begin(), union_in.end(),
                                 [&](int x) { return union_out.count(x); });
    if (!disjoint) continue;
    std::sort(derived_in.begin(), derived_in.end());
    std::sort(derived_out.begin(), derived_out.end());
    if (decide(derived_in, memo) && decide(derived_out, memo)) {
      memo.table[collection] =
          Decision{j, dropped, derived_in, derived_out};
      return true;
    }
  }
  return false;
}

void rebuild_trace(const Canonical& collection, Memo& memo,
                   std::vector<FactoringStep>& trace) {
  const auto& decision = memo.table.at(collection);
  FactoringStep step;
  step.collection = collection;
  step.chosen_j = decision->chosen_j;
  step.dropped_empty_members = decision->dropped_empty;
  trace.push_back(step);
  if (decision->chosen_j != 0) {
    if (!decision->derived_in.empty())
      rebuild_trace(decision->derived_in, memo, trace);
    if (!decision->derived_out.empty())
      rebuild_trace(decision->derived_out, memo, trace);
  }
}

}  // namespace

FamilyMembership in_A(const SubsetCollection& c) {
  c.validate();
  Memo memo;
  Canonical canonical = canonical_form(c.subsets);
  FamilyMembership result;
  result.accepted = decide(canonical, memo);
  if (result.accepted) rebuild_trace(canonical, memo, result.trace);
  return result;
}

MonomialIdeal build_ideal(const SubsetCollection& c, const PrimeAssignment& p,
                          ContextPtr ctx) {
  c.validate();
  p.validate(ctx->num_vars());
  for (const auto& a : c.subsets)
    for (int i : a)
      if (i > static_cast<int>(p.primes.size()))
        throw InvalidIdealInput("collection references a missing prime");

  auto prime_ideal = [&](int i) {
    std::vector<Monomial> gens;
    for (int v : p.primes[i - 1])
      gens.push_back(variable_monomial(ctx->num_vars(), v));
    return MonomialIdeal(ctx, gens);
  };

  MonomialIdeal total = zero_ideal(ctx);
  for (const auto& a : c.subsets) {
    MonomialIdeal term = unit_ideal(ctx);
    for (int i : a) term = product(term, prime_ideal(i));
    total = sum(total, term);
  }
  return total;
}

ClassCResult in_class_C(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw InvalidIdealInput("class recognizer needs a proper nonzero ideal");
  if (!I.is_squarefree())
    throw InvalidIdealInput("class recognizer needs a squarefree ideal");

  ClassCResult result;
  for (const auto& block : variable_disjoint_blocks(I)) {
    if (!is_equigenerated(block)) return {};
    const Monomial u = block.gens().front();  // lex-least generator
    ClassCBlock factors;
    std::set<int> used;
    for (int c : u.support()) {
      // candidate prime containing x_c: all swaps of x_c keeping us in I
      std::vector<int> prime{c};
      Monomial stub = u / variable_monomial(I.num_vars(), c);
      for (int y = 0; y < I.num_vars(); ++y) {
        if (y == c) continue;
        if (block.contains(stub * variable_monomial(I.num_vars(), y)))
          prime.push_back(y);
      }
      std::sort(prime.begin(), prime.end());
      for (int v : prime)
        if (!used.insert(v).second) return {};  // factors must be disjoint
      factors.primes.push_back(std::move(prime));
    }
    // deterministic order: by least variable
    std::sort(factors.primes.begin(), factors.primes.end());
    // verify by expansion
    MonomialIdeal expansion = unit_ideal(I.context());
    for (const auto& prime : factors.primes) {
      std::vector<Monomial> gens;
      for (int v : prime) gens.push_back(variable_monomial(I.num_vars(), v));
      expansion = product(expansion, MonomialIdeal(I.context(), gens));
    }
    if (!(expansion == block)) return {};
    result.blocks.push_back(std::move(factors));
  }
  result.accepted = true;
  return result;
}

namespace {

void require_combinable(const FamilyReport& a, const FamilyReport& b) {
  if (!supports_disjoint(a.ideal, b.ideal))
    throw InvalidIdealInput("combination requires disjoint supports");
  if (!a.cm.granted() || !b.cm.granted())
    throw InvalidIdealInput(
        "combination requires Cohen-Macaulay Rees rings on both sides");
  if (!a.spread.exact() || !b.spread.exact())
    throw InvalidIdealInput("combination requires exact spreads");
}

}  // namespace

FamilyReport combine_sum(const FamilyReport& a, const FamilyReport& b) {
  require_combinable(a, b);
  FamilyReport out{sum(a.ideal, b.ideal), a.constant && b.constant,
                   ReesCMStatus::guaranteed(CMReason::disjoint_sum_of_CM),
                   {spread_sum_disjoint(a.spread.value, b.spread.value),
                    SpreadMethod::disjoint_sum, Confidence::exact, 0}};
  return out;
}

FamilyReport combine_product(const FamilyReport& a, const FamilyReport& b) {
  require_combinable(a, b);
  FamilyReport out{product(a.ideal, b.ideal), a.constant && b.constant,
                   ReesCMStatus::guaranteed(CMReason::disjoint_product_of_CM),
                   {spread_product_disjoint(a.spread.value, b.spread.value),
                    SpreadMethod::disjoint_product, Confidence::exact, 0}};
  return out;
}

}  // namespace constdepth
