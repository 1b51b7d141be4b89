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

#include "constdepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace constdepth {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

struct Line {
  std::string text;
  int number;
};

// Content lines, with comments and blanks removed.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); }))
      continue;
    out.push_back({line, number});
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// A line of the shape `keyword: payload`, or nullopt.
std::optional<std::string> keyword_payload(const Line& line,
                                           const std::string& keyword) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  if (trim(line.text.substr(0, colon)) != keyword) return std::nullopt;
  return trim(line.text.substr(colon + 1));
}

Monomial parse_monomial(const std::string& text, const PolyContext& ctx,
                        int line_number) {
  ExpVec exps(ctx.num_vars(), 0);
  for (const std::string& raw : split(text, '*')) {
    std::string factor = trim(raw);
    if (factor.empty())
      throw ParseError("empty factor in generator", line_number, 1);
    if (factor == "1") continue;
    std::string name = factor;
    Exponent exponent = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      std::string power_text = trim(factor.substr(caret + 1));
      try {
        exponent = std::stoll(power_text);
      } catch (const std::exception&) {
        throw ParseError("bad exponent '" + power_text + "'", line_number, 1);
      }
      if (exponent < 0)
        throw ParseError("negative exponent", line_number, 1);
    }
    int index = ctx.index_of(name);
    if (index < 0)
      throw ParseError("unknown variable '" + name + "'", line_number, 1);
    exps[index] += exponent;
  }
  return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal_input(const std::string& text, FieldSpec field) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty ideal input", 1, 1);
  auto vars = keyword_payload(lines[0], "vars");
  if (!vars)
    throw ParseError("expected a 'vars:' header line", lines[0].number, 1);
  std::vector<std::string> names;
  std::istringstream vs(*vars);
  std::string name;
  while (vs >> name) names.push_back(name);
  if (names.empty())
    throw ParseError("no variables declared", lines[0].number, 1);
  auto ctx = make_context(names, field);

  std::vector<Monomial> gens;
  for (size_t l = 1; l < lines.size(); ++l) {
    for (const std::string& raw : split(lines[l].text, ',')) {
      std::string gen = trim(raw);
      if (gen.empty()) continue;
      gens.push_back(parse_monomial(gen, *ctx, lines[l].number));
    }
  }
  return minimalize(ctx, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& name : I.context()->var_names()) os << " " << name;
  os << "\n";
  for (size_t i = 0; i < I.gens().size(); ++i) {
    if (i) os << ", ";
    os << I.gens()[i].to_string(*I.context());
  }
  os << "\n";
  return os.str();
}

Graph parse_graph_input(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty graph input", 1, 1);
  Graph g;
  bool seen_header = false;
  for (const auto& line : lines) {
    auto payload = keyword_payload(line, "graph");
    std::string body;
    if (payload) {
      seen_header = true;
      body = *payload;
    } else if (seen_header) {
      body = line.text;  // continuation lines of edges
    } else {
      throw ParseError("expected a 'graph:' line", line.number, 1);
    }
    for (const std::string& raw : split(body, ',')) {
      std::string edge = trim(raw);
      if (edge.empty()) continue;
      auto dash = edge.find('-');
      if (dash == std::string::npos)
        throw ParseError("edge '" + edge + "' needs the form a-b", line.number,
                         1);
      try {
        int a = std::stoi(trim(edge.substr(0, dash)));
        int b = std::stoi(trim(edge.substr(dash + 1)));
        g.add_edge(a, b);
      } catch (const InvalidIdealInput& e) {
        throw ParseError(e.what(), line.number, 1);
      } catch (const std::exception&) {
        throw ParseError("bad vertex in edge '" + edge + "'", line.number, 1);
      }
    }
  }
  return g;
}

SimplicialComplex parse_complex_input(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty complex input", 1, 1);
  auto payload = keyword_payload(lines[0], "complex");
  if (!payload)
    throw ParseError("expected a 'complex:' line", lines[0].number, 1);
  std::vector<std::set<int>> facets;
  for (const std::string& raw : split(*payload, ';')) {
    std::string facet_text = trim(raw);
    if (facet_text.empty()) continue;
    std::set<int> facet;
    std::istringstream fs(facet_text);
    int v;
    while (fs >> v) facet.insert(v);
    if (facet.empty())
      throw ParseError("empty facet", lines[0].number, 1);
    facets.push_back(std::move(facet));
  }
  try {
    return SimplicialComplex(std::move(facets));
  } catch (const InvalidIdealInput& e) {
    throw ParseError(e.what(), lines[0].number, 1);
  }
}

namespace {

// `{a b} {c}` -> list of token groups
std::vector<std::vector<std::string>> parse_braced_groups(
    const std::string& payload, int line_number) {
  std::vector<std::vector<std::string>> groups;
  size_t pos = 0;
  while (pos < payload.size()) {
    if (std::isspace(static_cast<unsigned char>(payload[pos]))) {
      ++pos;
      continue;
    }
    if (payload[pos] != '{')
      throw ParseError("expected '{'", line_number,
                       static_cast<int>(pos) + 1);
    auto close = payload.find('}', pos);
    if (close == std::string::npos)
      throw ParseError("unbalanced '{'", line_number,
                       static_cast<int>(pos) + 1);
    std::istringstream in(payload.substr(pos + 1, close - pos - 1));
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    if (tokens.empty())
      throw ParseError("empty group", line_number, static_cast<int>(pos) + 1);
    groups.push_back(std::move(tokens));
    pos = close + 1;
  }
  return groups;
}

}  // namespace

FamilyInput parse_family_input(const std::string& text, FieldSpec field) {
  FamilyInput input;
  std::optional<std::vector<std::vector<std::string>>> primes;
  std::optional<std::vector<std::vector<std::string>>> collection;
  int collection_line = 1;
  for (const auto& line : content_lines(text)) {
    if (auto payload = keyword_payload(line, "primes")) {
      primes = parse_braced_groups(*payload, line.number);
    } else if (auto payload2 = keyword_payload(line, "collection")) {
      collection = parse_braced_groups(*payload2, line.number);
      collection_line = line.number;
    } else {
      throw ParseError("expected 'primes:' or 'collection:'", line.number, 1);
    }
  }
  if (!collection)
    throw ParseError("missing 'collection:' line", 1, 1);

  if (primes) {
    std::vector<std::string> names;
    for (const auto& group : *primes) {
      std::vector<int> prime;
      for (const auto& name : group) {
        if (std::find(names.begin(), names.end(), name) != names.end())
          throw ParseError("variable '" + name + "' reused across primes", 1,
                           1);
        prime.push_back(static_cast<int>(names.size()));
        names.push_back(name);
      }
      input.primes.primes.push_back(std::move(prime));
    }
    input.ctx = make_context(names, field);
  }

  int max_label = static_cast<int>(input.primes.primes.size());
  for (const auto& group : *collection) {
    std::set<int> subset;
    for (const auto& token : group) {
      try {
        int label = std::stoi(token);
        subset.insert(label);
        max_label = std::max(max_label, label);
      } catch (const std::exception&) {
        throw ParseError("bad collection label '" + token + "'",
                         collection_line, 1);
      }
    }
    input.collection.subsets.push_back(std::move(subset));
  }
  input.collection.s = max_label;
  input.collection.validate();
  if (input.ctx) input.primes.validate(input.ctx->num_vars());
  return input;
}

// JSON -----------------------------------------------------------------

nlohmann::json to_json(const DepthReport& report) {
  nlohmann::json j{{"depth", report.depth},
                   {"proj_dim", report.proj_dim},
                   {"series", report.series},
                   {"constant_up_to", report.constant_up_to},
                   {"field", report.field.to_string()},
                   {"guards_hit", report.guards_hit}};
  j["ideal"] = report.ideal.to_string();
  // machine-readable form; feeding it back to the parser reproduces the
  // canonical generator list
  j["ideal_input"] = format_ideal(report.ideal);
  if (report.limit_claim)
    j["limit_claim"] = {{"value", report.limit_claim->first},
                        {"justification", report.limit_claim->second}};
  return j;
}

nlohmann::json to_json(const SpreadResult& result) {
  return {{"value", result.value},
          {"method", to_string(result.method)},
          {"confidence", result.exact() ? "exact" : "heuristic_lower_bound"},
          {"k_max", result.k_max}};
}

nlohmann::json to_json(const Certificate& cert) {
  return {{"verdict", to_string(cert.verdict)},
          {"method", to_string(cert.method)},
          {"cm_basis", cert.cm_basis},
          {"n_minus_ell", cert.n_minus_ell},
          {"depth1", cert.depth1}};
}

nlohmann::json to_json(const EdgeVerdict& verdict) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& info : verdict.component_info) {
    components.push_back({{"vertices", info.vertices},
                          {"bipartite", info.bipartite},
                          {"complete_bipartite", info.complete_bipartite},
                          {"witness", info.witness}});
  }
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& parts : verdict.factorization)
    factors.push_back({{"part1", parts.part1}, {"part2", parts.part2}});
  return {{"constant", verdict.constant},
          {"stripped", verdict.stripped},
          {"components", components},
          {"witness", verdict.witness},
          {"factorization", factors}};
}

nlohmann::json to_json(const MatroidalVerdict& verdict,
                       const PolyContext& ctx) {
  nlohmann::json j{{"matroidal", verdict.matroidal}};
  if (verdict.witness) {
    j["witness"] = {{"u", verdict.witness->u.to_string(ctx)},
                    {"v", verdict.witness->v.to_string(ctx)},
                    {"var", ctx.var_name(verdict.witness->var)}};
  }
  if (!verdict.matroidal) return j;
  std::vector<std::string> dropped;
  for (int v : verdict.dropped_variables) dropped.push_back(ctx.var_name(v));
  j["normalized_by"] = {{"gcd", verdict.normalized_by_gcd.to_string(ctx)},
                        {"dropped_variables", dropped}};
  j["d"] = verdict.d;
  j["r"] = verdict.r;
  j["s"] = verdict.s;
  j["constant"] = verdict.constant;
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& factor : verdict.factors) {
    std::vector<std::string> names;
    for (int v : factor) names.push_back(ctx.var_name(v));
    factors.push_back(names);
  }
  j["factors"] = factors;
  return j;
}

nlohmann::json to_json(const ForestVerdict& verdict) {
  nlohmann::json presentation = nlohmann::json::array();
  for (const auto& factor : verdict.presentation)
    presentation.push_back(
        {{"gcd", factor.gcd}, {"prime_vertices", factor.prime_vars}});
  return {{"applicable", verdict.applicable},
          {"failed_hypotheses", verdict.failed_hypotheses},
          {"constant", verdict.constant},
          {"presentation", presentation}};
}

nlohmann::json to_json(const FamilyMembership& membership) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& step : membership.trace)
    trace.push_back({{"collection", step.collection},
                     {"chosen_j", step.chosen_j},
                     {"dropped_empty_members", step.dropped_empty_members}});
  return {{"accepted", membership.accepted}, {"trace", trace}};
}

nlohmann::json to_json(const ClassCResult& result, const PolyContext& ctx) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : result.blocks) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& prime : block.primes) {
      std::vector<std::string> names;
      for (int v : prime) names.push_back(ctx.var_name(v));
      primes.push_back(names);
    }
    blocks.push_back({{"primes", primes}});
  }
  return {{"accepted", result.accepted}, {"blocks", blocks}};
}

}  // namespace constdepth
