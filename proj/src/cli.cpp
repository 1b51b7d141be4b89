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

#include "constdepth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "constdepth/forest.hpp"
#include "constdepth/io.hpp"
#include "constdepth/matroidal.hpp"

namespace constdepth {

// Random generators ----------------------------------------------------

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int n, int max_gens,
                                    Exponent max_exp) {
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  auto ctx = make_context(n);
  std::vector<Monomial> gens;
  int m = gen_count(rng);
  for (int g = 0; g < m; ++g) {
    ExpVec e(n, 0);
    for (int i = 0; i < n; ++i) e[i] = exp(rng);
    gens.emplace_back(std::move(e));
  }
  return minimalize(ctx, std::move(gens));
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n,
                                      int max_gens) {
  return random_monomial_ideal(rng, n, max_gens, 1);
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::bernoulli_distribution flip(edge_prob);
  Graph g;
  for (int v = 1; v <= n; ++v) g.vertices.insert(v);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (flip(rng)) g.add_edge(a, b);
  return g;
}

namespace {

// Collection over a disjoint label pool; every member is nonempty.
std::vector<std::set<int>> grow_collection(std::mt19937_64& rng,
                                           std::vector<int> pool, int budget) {
  if (pool.empty() || budget <= 0) return {};
  std::bernoulli_distribution coin(0.5);
  if (pool.size() == 1 || coin(rng)) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<size_t> take(
        1, std::min<size_t>(pool.size(), budget));
    std::vector<std::set<int>> out;
    size_t count = take(rng);
    for (size_t i = 0; i < count; ++i) out.push_back({pool[i]});
    return out;
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  int j = pool.back();
  pool.pop_back();
  std::uniform_int_distribution<size_t> cut(0, pool.size());
  size_t split = cut(rng);
  std::vector<int> inside_pool(pool.begin(), pool.begin() + split);
  std::vector<int> outside_pool(pool.begin() + split, pool.end());

  auto inside = grow_collection(rng, inside_pool, budget - 1);
  if (inside.empty()) inside.push_back({});
  for (auto& member : inside) member.insert(j);
  auto outside = grow_collection(
      rng, outside_pool, budget - static_cast<int>(inside.size()));
  inside.insert(inside.end(), outside.begin(), outside.end());
  return inside;
}

}  // namespace

SubsetCollection random_accepted_collection(std::mt19937_64& rng, int s,
                                            int max_members) {
  std::vector<int> pool(s);
  std::iota(pool.begin(), pool.end(), 1);
  SubsetCollection c;
  c.s = s;
  c.subsets = grow_collection(rng, std::move(pool), max_members);
  if (c.subsets.empty()) c.subsets.push_back({1});
  return c;
}

// Corpus ---------------------------------------------------------------

namespace {

std::string dump_reproducer(const CorpusSpec& spec, int index,
                            const std::string& body) {
  std::string path = spec.dump_dir + "/reproducer-" + spec.kind + "-" +
                     std::to_string(index) + ".txt";
  std::ofstream out(path);
  out << "# seed " << spec.seed << ", case " << index << "\n" << body;
  return path;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "graph:";
  bool first = true;
  for (const auto& [a, b] : g.edges) {
    os << (first ? " " : ", ") << a << "-" << b;
    first = false;
  }
  os << "\n";
  return os.str();
}

bool series_increases(const std::vector<int>& series) {
  for (size_t k = 1; k < series.size(); ++k)
    if (series[k] > series[k - 1]) return true;
  return false;
}

}  // namespace

CorpusSummary corpus_sweep(const CorpusSpec& spec) {
  CorpusSummary summary;
  if (spec.kind.empty() || spec.count <= 0) return summary;
  std::mt19937_64 rng(spec.seed);

  for (int i = 0; i < spec.count; ++i) {
    if (spec.kind == "graphs") {
      Graph g = random_graph(rng, spec.n, 0.4);
      if (g.edges.empty()) continue;
      ++summary.ran;
      auto verdict = classify_edge_ideal(g);
      auto report =
          depth_series(edge_ideal(strip_isolated(g)), spec.k_max, spec.guards);
      if (verdict.constant && !report.constant_prefix()) {
        ++summary.disagreements;
        summary.reproducers.push_back(dump_reproducer(spec, i, format_graph(g)));
      }
      if (series_increases(report.series)) {
        ++summary.findings;
        summary.reproducers.push_back(dump_reproducer(spec, i, format_graph(g)));
      }
    } else if (spec.kind == "ideals") {
      MonomialIdeal I = random_squarefree_ideal(rng, spec.n, spec.n + 1);
      if (I.is_zero() || I.is_unit()) continue;
      ++summary.ran;
      bool dumped = false;
      std::vector<int> series;
      for (int k = 1; k <= spec.k_max; ++k) {
        MonomialIdeal pk = power(I, k);
        int dk = depth(pk, spec.guards);
        series.push_back(dk);
        if (depth(radical(pk), spec.guards) < dk) {
          ++summary.disagreements;
          if (!dumped)
            summary.reproducers.push_back(
                dump_reproducer(spec, i, format_ideal(I)));
          dumped = true;
        }
      }
      if (series_increases(series)) {
        ++summary.findings;
        if (!dumped)
          summary.reproducers.push_back(dump_reproducer(spec, i, format_ideal(I)));
      }
    } else {
      throw InvalidIdealInput("unknown corpus kind '" + spec.kind + "'");
    }
  }
  return summary;
}

// Command line ---------------------------------------------------------

namespace {

struct Options {
  int k_max = 3;
  std::string field = "q";
  int jobs = 1;
  std::string format = "text";
  int guard_lcm = 22;
  std::uint64_t seed = 42;
  bool assert_cm = false;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "q") return FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      return FieldSpec::prime(std::stoll(text.substr(3)));
    } catch (const InvalidIdealInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidIdealInput("bad field spec '" + text + "'");
    }
  }
  throw InvalidIdealInput("field must be q or fp:P, got '" + text + "'");
}

Guards make_guards(const Options& opt) {
  Guards g;
  g.lcm_max_gens = opt.guard_lcm;
  g.jobs = opt.jobs;
  return g;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidIdealInput("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const nlohmann::json& j, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string())
      out << key << ": " << value.get<std::string>() << "\n";
    else
      out << key << ": " << value.dump() << "\n";
  }
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--kmax", opt.k_max, "powers to inspect")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--field", opt.field, "coefficient field: q or fp:P");
  cmd->add_option("--jobs", opt.jobs, "worker threads for homology")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--guard-lcm", opt.guard_lcm, "lcm lattice generator guard")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "random seed");
}

// Exact spread if available, else the mu-growth route.
SpreadResult best_spread(const MonomialIdeal& I, const Options& opt) {
  if (is_equigenerated(I)) return spread_exponent_rank(I);
  return spread_mu_growth(I, std::max(opt.k_max, 3));
}

int cmd_series(const std::string& input, const Options& opt,
               std::ostream& out) {
  MonomialIdeal I = parse_ideal_input(slurp(input), parse_field(opt.field));
  DepthReport report = depth_series(I, opt.k_max, make_guards(opt));
  nlohmann::json j = to_json(report);
  if (opt.assert_cm) {
    SpreadResult l = best_spread(I, opt);
    if (l.exact()) {
      Certificate cert =
          certify_constant(I, ReesCMStatus::asserted(), report.series[0], l);
      j["certificate"] = to_json(cert);
    } else {
      j["certificate"] = {{"verdict", "EVIDENCE_ONLY"},
                          {"note", "analytic spread is only heuristic"}};
    }
  }
  emit(j, opt, out);
  return 0;
}

int cmd_classify_forest(const std::string& input, const Options& opt,
                        std::ostream& out) {
  SimplicialComplex delta = parse_complex_input(slurp(input));
  ForestVerdict verdict = classify_forest(delta);
  nlohmann::json j = to_json(verdict);
  if (verdict.applicable) {
    emit(j, opt, out);
    return 0;
  }
  // Hypothesis failure decides nothing; fall back to the certificate and
  // series route on the facet ideal.
  j["verdict"] = "NOT_APPLICABLE";
  MonomialIdeal I = facet_ideal(delta);
  DepthReport report = depth_series(I, opt.k_max, make_guards(opt));
  j["fallback"] = to_json(report);
  bool forest = std::find(verdict.failed_hypotheses.begin(),
                          verdict.failed_hypotheses.end(),
                          "forest") == verdict.failed_hypotheses.end();
  if (forest) {
    Certificate cert = certify_constant(
        I, ReesCMStatus::guaranteed(CMReason::simplicial_forest),
        report.series[0], spread_forest(delta));
    j["fallback"]["certificate"] = to_json(cert);
  }
  emit(j, opt, out);
  return 2;
}

// A FamilyReport for an ideal the transversal-block recognizer accepts.
FamilyReport report_from_class_C(const MonomialIdeal& I) {
  ClassCResult c = in_class_C(I);
  if (!c.accepted)
    throw InvalidIdealInput(
        "combine input is not a recognized disjoint sum of transversal ideals");
  auto blocks = variable_disjoint_blocks(I);
  int ell = 0;
  for (const auto& block : blocks) ell += spread_exponent_rank(block).value;
  SpreadResult l{ell,
                 blocks.size() == 1 ? SpreadMethod::exponent_rank
                                    : SpreadMethod::disjoint_sum,
                 Confidence::exact, 0};
  CMReason reason = blocks.size() == 1 ? CMReason::prime_power_product
                                       : CMReason::disjoint_sum_of_CM;
  return {I, true, ReesCMStatus::guaranteed(reason), l};
}

int cmd_combine(const std::string& input1, const std::string& input2,
                const std::string& op, const Options& opt, std::ostream& out) {
  FieldSpec field = parse_field(opt.field);
  MonomialIdeal a = parse_ideal_input(slurp(input1), field);
  MonomialIdeal b = parse_ideal_input(slurp(input2), field);
  if (a.context()->var_names() != b.context()->var_names())
    throw InvalidIdealInput("combine inputs must share one vars: header");
  b = MonomialIdeal(a.context(), b.gens());
  FamilyReport combined = op == "sum"
                              ? combine_sum(report_from_class_C(a),
                                            report_from_class_C(b))
                              : combine_product(report_from_class_C(a),
                                                report_from_class_C(b));
  nlohmann::json j{{"ideal", combined.ideal.to_string()},
                   {"constant", combined.constant},
                   {"cm", combined.cm.describe()},
                   {"spread", to_json(combined.spread)}};
  emit(j, opt, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact constant-depth analysis of squarefree monomial ideals"};
  app.require_subcommand(1);
  Options opt;

  std::string input, input2, combine_op = "sum";
  CorpusSpec corpus;

  auto* depth_cmd = app.add_subcommand("depth", "depth of S/I");
  depth_cmd->add_option("input", input, "ideal file, or - for stdin")
      ->required();
  auto* series_cmd = app.add_subcommand("series", "depth of S/I^k, k=1..kmax");
  series_cmd->add_option("input", input)->required();
  series_cmd->add_flag("--assert-cm", opt.assert_cm,
                       "assert the Rees ring is Cohen-Macaulay");
  auto* spread_cmd = app.add_subcommand("spread", "analytic spread");
  spread_cmd->add_option("input", input)->required();
  auto* edge_cmd = app.add_subcommand("classify-edge", "edge ideal verdict");
  edge_cmd->add_option("input", input, "graph file")->required();
  auto* matroid_cmd =
      app.add_subcommand("classify-matroidal", "matroidal verdict");
  matroid_cmd->add_option("input", input)->required();
  auto* forest_cmd =
      app.add_subcommand("classify-forest", "simplicial forest verdict");
  forest_cmd->add_option("input", input, "complex file")->required();
  auto* check_a_cmd =
      app.add_subcommand("check-A", "recursive family membership");
  check_a_cmd->add_option("input", input, "collection file")->required();
  auto* check_c_cmd =
      app.add_subcommand("check-C", "transversal-sum recognizer");
  check_c_cmd->add_option("input", input)->required();
  auto* build_cmd =
      app.add_subcommand("build", "ideal from primes and a collection");
  build_cmd->add_option("input", input, "family file")->required();
  auto* combine_cmd =
      app.add_subcommand("combine", "sum/product of recognized ideals");
  combine_cmd->add_option("input", input)->required();
  combine_cmd->add_option("input2", input2)->required();
  combine_cmd->add_option("--op", combine_op)
      ->check(CLI::IsMember({"sum", "product"}));
  auto* corpus_cmd = app.add_subcommand("corpus", "seeded random sweep");
  corpus_cmd->add_option("--kind", corpus.kind)
      ->check(CLI::IsMember({"graphs", "ideals"}));
  corpus_cmd->add_option("--count", corpus.count);
  corpus_cmd->add_option("--n", corpus.n)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--dump-dir", corpus.dump_dir);

  for (auto* cmd : app.get_subcommands({})) add_common(cmd, opt);

  std::vector<const char*> argv{"constdepth"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*depth_cmd) {
      MonomialIdeal I = parse_ideal_input(slurp(input), parse_field(opt.field));
      DepthReport report = depth_series(I, 1, make_guards(opt));
      emit(to_json(report), opt, out);
      return 0;
    }
    if (*series_cmd) return cmd_series(input, opt, out);
    if (*spread_cmd) {
      MonomialIdeal I = parse_ideal_input(slurp(input), parse_field(opt.field));
      emit(to_json(best_spread(I, opt)), opt, out);
      return 0;
    }
    if (*edge_cmd) {
      EdgeVerdict verdict = classify_edge_ideal(parse_graph_input(slurp(input)));
      emit(to_json(verdict), opt, out);
      return 0;
    }
    if (*matroid_cmd) {
      MonomialIdeal I = parse_ideal_input(slurp(input), parse_field(opt.field));
      MatroidalVerdict verdict = classify_matroidal(I);
      nlohmann::json j = to_json(verdict, *I.context());
      if (!verdict.matroidal) {
        j["verdict"] = "NOT_APPLICABLE";
        emit(j, opt, out);
        return 2;
      }
      emit(j, opt, out);
      return 0;
    }
    if (*forest_cmd) return cmd_classify_forest(input, opt, out);
    if (*check_a_cmd) {
      FamilyInput family = parse_family_input(slurp(input));
      emit(to_json(in_A(family.collection)), opt, out);
      return 0;
    }
    if (*check_c_cmd) {
      MonomialIdeal I = parse_ideal_input(slurp(input), parse_field(opt.field));
      emit(to_json(in_class_C(I), *I.context()), opt, out);
      return 0;
    }
    if (*build_cmd) {
      FamilyInput family =
          parse_family_input(slurp(input), parse_field(opt.field));
      if (!family.ctx)
        throw InvalidIdealInput("build needs a primes: line");
      out << format_ideal(
          build_ideal(family.collection, family.primes, family.ctx));
      return 0;
    }
    if (*combine_cmd) return cmd_combine(input, input2, combine_op, opt, out);
    if (*corpus_cmd) {
      corpus.seed = opt.seed;
      corpus.k_max = opt.k_max;
      corpus.guards = make_guards(opt);
      CorpusSummary summary = corpus_sweep(corpus);
      nlohmann::json j{{"ran", summary.ran},
                       {"disagreements", summary.disagreements},
                       {"findings", summary.findings},
                       {"reproducers", summary.reproducers}};
      emit(j, opt, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace constdepth
