// Copyright 2026 The pflab Authors.
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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pflab/cli.hpp"
#include "pflab/cuts.hpp"
#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"
#include "pflab/split.hpp"
#include "pflab/symbolic.hpp"

namespace pflab::cli {

namespace {

Json input_summary(const Graph& g) {
  std::uint64_t count = g.vertex_count() % 2 == 0 ? count_perfect_matchings(g) : 0;
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"matchings", count}};
}

bool solves_ones(const SignMatrix& s, const RationalVector& alpha) {
  for (const Rational& x : multiply(s.to_rational(), alpha)) {
    if (x != 1) return false;
  }
  return true;
}

Json vertex_set_json(const VertexSet& s) { return Json(s); }

}  // namespace

VertexSet parse_shore(const std::string& text) {
  std::vector<Vertex> vs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw DomainError("empty shore entry in '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("malformed shore entry '" + item + "'");
    vs.push_back(v);
  }
  return make_vertex_set(std::move(vs));
}

Report cmd_matchings(const Graph& g, bool list) {
  Json result;
  std::vector<Matching> all;
  if (g.vertex_count() % 2 == 0) all = enumerate_perfect_matchings(g);
  result["count"] = all.size();
  result["matchable"] = !all.empty();
  if (list) {
    Json items = Json::array();
    for (const Matching& m : all) items.push_back(to_json(m));
    result["list"] = items;
  }
  return {Json{{"command", "matchings"}, {"input", input_summary(g)}, {"result", result}},
          kOk};
}

Report cmd_pfnum(const Graph& g, const SearchOptions& options) {
  PfaffianNumberResult r = pfaffian_number(g, options);
  Json report{{"command", "pfnum"},
              {"options",
               {{"k_budget", options.k_budget},
                {"time_budget_ms", options.time_budget.count()}}},
              {"input", input_summary(g)}};
  const bool exact = r.status == SearchStatus::kExact;
  report["result"] = {{"k", r.k},
                      {"status", exact ? "exact" : "lower_bound_only"},
                      {"class_count", r.class_count},
                      {"distinct_sign_vectors", r.distinct_sign_vectors}};
  if (r.witness && r.solution) {
    SignMatrix s = signature_matrix(*r.witness);
    const bool verified = solves_ones(s, r.solution->alpha);
    report["witness"] = {{"orientations", to_json(*r.witness)},
                         {"classes", r.witness_classes},
                         {"alpha", to_json(r.solution->alpha)},
                         {"signature_rank", rank_of_signature(s)},
                         {"verified", verified}};
    if (!verified) return {report, kAssertionFailure};
  } else {
    report["witness"] = nullptr;
  }
  report["budget"] = {{"status", exact ? "complete" : "exhausted"},
                      {"note", r.budget_note}};
  return {report, exact ? kOk : kResourceFailure};
}

Report cmd_symbolic_count(const Graph& g, const std::string& korientation_text,
                          const Limits& limits) {
  KOrientation kd = parse_korientation(share(g), korientation_text);
  Json report{{"command", "symbolic-count"}, {"input", input_summary(g)},
              {"k", kd.size()}};
  if (!solve_pfaffian_system(signature_matrix(kd))) {
    SymbolicOrientation candidate = symbolic_candidate(kd);
    auto pair = find_symbolic_obstruction(candidate.orientation, candidate.labeling);
    Json obstruction = nullptr;
    if (pair) obstruction = Json::array({to_json(pair->first), to_json(pair->second)});
    report["error"] = {{"kind", "domain"},
                       {"message", "k-orientation is not pfaffian"},
                       {"obstruction", obstruction}};
    return {report, kDomainFailure};
  }
  SymbolicOrientation so = symbolic_from_korientation(kd);
  BigInt count = count_via_symbolic(so.orientation, so.labeling, limits);
  const std::uint64_t matchings = count_perfect_matchings(g);
  const bool agrees = count == matchings;
  report["result"] = {{"d", so.labeling.d},
                      {"count", to_json(count)},
                      {"agrees_with_enumeration", agrees}};
  report["witness"] = {{"orientation", to_json(so.orientation)},
                       {"labeling", to_json(so.labeling)},
                       {"pfaffian_symbolic", true}};
  return {report, agrees ? kOk : kAssertionFailure};
}

Report cmd_split(const Graph& g, const VertexSet& shore,
                 const std::string& korientation_text) {
  KOrientation kd = parse_korientation(share(g), korientation_text);
  Cut c = make_cut(g, shore);
  SplitResult s = split_orientation_at_cut(g, c, kd);
  bool similar = true;
  for (std::size_t i = 0; i < kd.size(); ++i) {
    std::vector<EdgeId> expected;
    if (!s.reversal_shores[i].empty()) {
      expected = make_cut(g, s.reversal_shores[i]).edge_ids;
    }
    similar = similar && orientation_difference(kd[i], s.result[i]) == expected;
  }
  Json paths = Json::object();
  for (const auto& [w, p] : s.paths) {
    paths[std::to_string(w)] = {{"vertices", p.vertices}, {"edges", p.edge_ids}};
  }
  Json shores = Json::array();
  for (const VertexSet& x : s.reversal_shores) shores.push_back(vertex_set_json(x));
  Json report{{"command", "split"},
              {"input", input_summary(g)},
              {"cut", {{"shore", vertex_set_json(shore)}, {"edges", c.edge_ids}}},
              {"anchor",
               {{"edge", s.anchor_edge},
                {"shore_end", s.anchor_inner},
                {"far_end", s.anchor_outer},
                {"matching", to_json(s.anchor_matching)}}},
              {"paths", paths},
              {"reversal_shores", shores},
              {"result", to_json(s.result)},
              {"contractions",
               {{"shore_side_alpha", to_json(s.shore_side_solution.alpha)},
                {"far_side_alpha", to_json(s.far_side_solution.alpha)},
                {"both_pfaffian", true}}},
              {"similar_to_input", similar}};
  return {report, similar ? kOk : kAssertionFailure};
}

Report cmd_decompose(const Graph& g, std::uint64_t seed, const Limits& limits) {
  DecompositionResult d = tight_cut_decomposition(g, seed, limits);
  Json pieces = Json::array();
  bool clean = true;
  int bricks = 0;
  for (const DecompositionPiece& p : d.pieces) {
    const bool brick = p.kind == PieceKind::kBrick;
    bricks += brick;
    const bool no_tight = nontrivial_tight_shores(p.graph, limits).empty();
    clean = clean && no_tight;
    Json piece = to_json(p.graph);
    piece["kind"] = brick ? "brick" : "brace";
    piece["free_of_nontrivial_tight_cuts"] = no_tight;
    pieces.push_back(piece);
  }
  Json report{{"command", "decompose"},
              {"seed", seed},
              {"input", input_summary(g)},
              {"result",
               {{"bricks", bricks},
                {"braces", static_cast<int>(d.pieces.size()) - bricks},
                {"pieces", pieces}}}};
  return {report, clean ? kOk : kAssertionFailure};
}

std::string cmd_generate(const FamilySpec& spec) {
  return format_graph(generate_family(spec));
}

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

Json error_json(const std::string& command, const char* kind, const std::string& what) {
  return Json{{"command", command}, {"error", {{"kind", kind}, {"message", what}}}};
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pfaffian numbers, signatures and symbolic counting of small graphs"};
  app.require_subcommand(1);
  std::string format = "json";
  bool timings = false;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", timings, "add wall-clock timings to the report");

  std::string graph_path, korientation_path, shore_text, suite;
  bool list = false;
  SearchOptions search;
  std::int64_t time_budget_ms = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> family;

  auto* matchings = app.add_subcommand("matchings", "count perfect matchings");
  matchings->add_option("graph", graph_path, "edge-list file or -")->required();
  matchings->add_flag("--list", list, "list every perfect matching");

  auto* pfnum = app.add_subcommand("pfnum", "compute the pfaffian number");
  pfnum->add_option("graph", graph_path)->required();
  pfnum->add_option("--k-budget", search.k_budget)->check(CLI::PositiveNumber);
  pfnum->add_option("--time-budget", time_budget_ms, "milliseconds, 0 = none")
      ->check(CLI::NonNegativeNumber);
  pfnum->add_option("--jobs", search.jobs)->check(CLI::PositiveNumber);

  auto* symbolic = app.add_subcommand("symbolic-count",
                                      "count matchings through the symbolic pfaffian");
  symbolic->add_option("graph", graph_path)->required();
  symbolic->add_option("korientation", korientation_path)->required();

  auto* split = app.add_subcommand("split", "split a pfaffian k-orientation at a cut");
  split->add_option("graph", graph_path)->required();
  split->add_option("--shore", shore_text, "comma separated vertices")->required();
  split->add_option("korientation", korientation_path)->required();

  auto* decompose = app.add_subcommand("decompose", "tight cut decomposition");
  decompose->add_option("graph", graph_path)->required();
  decompose->add_option("--seed", seed);

  auto* generate = app.add_subcommand("generate", "print a family member as an edge list");
  generate->add_option("family", family, "name followed by its parameters")
      ->required()
      ->expected(1, -1);

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"signs", "cuts", "khatri-rao", "symbolic", "families",
                             "conjecture-scan"}));
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--jobs", verify_options.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--time-budget", time_budget_ms, "milliseconds per search")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kDomainFailure;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const Limits limits = Limits::from_environment();
    search.limits = limits;
    search.time_budget = std::chrono::milliseconds(time_budget_ms);
    verify_options.limits = limits;
    verify_options.time_budget = std::chrono::milliseconds(time_budget_ms);
    if (command == "generate") {
      FamilySpec spec{family.front(), {}};
      for (std::size_t i = 1; i < family.size(); ++i) {
        try {
          spec.params.push_back(std::stoi(family[i]));
        } catch (const std::exception&) {
          throw DomainError("family parameter '" + family[i] + "' is not an integer");
        }
      }
      out << cmd_generate(spec);
      return kOk;
    }
    if (command == "verify") {
      report = cmd_verify(suite, verify_options);
    } else {
      const Graph g = parse_graph(read_text(graph_path));
      if (command == "matchings") {
        report = cmd_matchings(g, list);
      } else if (command == "pfnum") {
        report = cmd_pfnum(g, search);
      } else if (command == "symbolic-count") {
        report = cmd_symbolic_count(g, read_text(korientation_path), limits);
      } else if (command == "split") {
        report = cmd_split(g, parse_shore(shore_text), read_text(korientation_path));
      } else {
        report = cmd_decompose(g, seed, limits);
      }
    }
  } catch (const ParseError& e) {
    report = {error_json(command, "parse", e.what()), kDomainFailure};
  } catch (const DomainError& e) {
    report = {error_json(command, "domain", e.what()), kDomainFailure};
  } catch (const ResourceError& e) {
    report = {error_json(command, "resource", e.what()), kResourceFailure};
  } catch (const VerificationError& e) {
    report = {error_json(command, "verification", e.what()), kAssertionFailure};
  }
  if (report.json.contains("error")) {
    err << "pflab " << command << ": "
        << report.json["error"]["message"].get<std::string>() << "\n";
  }
  if (timings) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.json["timings"] = {
        {"total_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  }
  if (format == "text") {
    render_text(report.json, "", out);
  } else {
    out << report.json.dump(2) << "\n";
  }
  return report.exit_code;
}

}  // namespace pflab::cli
