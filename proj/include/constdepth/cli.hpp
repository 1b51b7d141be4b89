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

#ifndef CONSTDEPTH_CLI_HPP
#define CONSTDEPTH_CLI_HPP

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "constdepth/betti.hpp"
#include "constdepth/families.hpp"
#include "constdepth/graphs.hpp"
#include "constdepth/monomial.hpp"

namespace constdepth {

// Seeded generators shared by the corpus sweep and the test suites.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int n, int max_gens,
                                    Exponent max_exp);
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n,
                                      int max_gens);
Graph random_graph(std::mt19937_64& rng, int n, double edge_prob);
// A random collection accepted by the recursive family membership test,
// built top-down by the same splitting rule it checks.
SubsetCollection random_accepted_collection(std::mt19937_64& rng, int s,
                                            int max_members);

struct CorpusSpec {
  std::string kind;  // "graphs" or "ideals"; empty runs nothing
  int count = 0;
  int n = 5;
  int k_max = 2;
  std::uint64_t seed = 42;
  Guards guards;
  std::string dump_dir = ".";  // reproducer files for violations
};

struct CorpusSummary {
  int ran = 0;
  int disagreements = 0;       // classifier vs series conflicts
  int findings = 0;            // conjecture-relevant observations
  std::vector<std::string> reproducers;
};

CorpusSummary corpus_sweep(const CorpusSpec& spec);

// Exit codes: 0 success, 2 when a classifier reports NOT_APPLICABLE,
// 1 on parse/guard/usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace constdepth

#endif  // CONSTDEPTH_CLI_HPP
