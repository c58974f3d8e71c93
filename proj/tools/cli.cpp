// Copyright 2026 The hradius Authors
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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "hradius/bounds.hpp"
#include "hradius/enumerate.hpp"
#include "hradius/formats.hpp"
#include "hradius/indices.hpp"
#include "hradius/report.hpp"
#include "hradius/transforms.hpp"

namespace hradius::cli {

namespace {

struct GraphInput {
  std::string g6;
  std::string edges_path;

  void attach(CLI::App* cmd) {
    auto* g6_opt = cmd->add_option("--g6", g6, "graph in graph6 encoding");
    auto* edges_opt = cmd->add_option("--edges", edges_path, "edge-list file ('n m' then 'u v' lines)");
    g6_opt->excludes(edges_opt);
  }

  Graph load(std::map<std::string, std::string>& inputs) const {
    Graph g;
    if (!g6.empty()) {
      g = parse_graph6(g6);
      inputs["source"] = "g6";
    } else if (!edges_path.empty()) {
      g = read_edge_list_file(edges_path);
      inputs["source"] = "edges:" + edges_path;
    } else {
      throw GraphError("a graph is required: pass --g6 <string> or --edges <file>");
    }
    inputs["graph6"] = to_graph6(g);
    return g;
  }
};

std::vector<Claim> parse_claims(const std::vector<std::string>& names) {
  std::vector<Claim> claims;
  for (const std::string& name : names) claims.push_back(claim_from_string(name));
  return claims;
}

std::string join_claims(const std::vector<Claim>& claims) {
  std::string out;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (i) out += ",";
    out += to_string(claims[i]);
  }
  return out;
}

void emit(const ReportEnvelope& envelope, const std::string& csv_path, std::ostream& out) {
  out << to_json(envelope) << '\n';
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw FormatError("cannot write CSV to '" + csv_path + "'");
    csv << to_csv(envelope);
  }
}

bool any_violated(const std::vector<BoundCheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == Status::kViolated) return true;
  }
  return false;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic/Randic index vs radius toolkit", "hradius"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(HRADIUS_VERSION));

  std::string csv_path;

  GraphInput index_graph;
  auto* index_cmd = app.add_subcommand("index", "Index report (H, R, radius, k, class) for one graph");
  index_graph.attach(index_cmd);
  index_cmd->add_option("--csv", csv_path, "also write a CSV row to this path");

  GraphInput check_graph;
  std::vector<std::string> check_claims;
  auto* check_cmd = app.add_subcommand("check", "Evaluate claims on one graph");
  check_graph.attach(check_cmd);
  check_cmd->add_option("--claims", check_claims, "comma-separated claim names")
      ->delimiter(',')
      ->required();
  check_cmd->add_option("--csv", csv_path, "also write CSV rows to this path");

  std::string family_name;
  std::size_t sweep_n = 0;
  bool dedup = false;
  bool override_cap = false;
  std::size_t jobs = 1;
  std::size_t max_certificates = 100;
  std::vector<std::string> sweep_claims;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate claims over a whole graph family");
  sweep_cmd->add_option("--family", family_name, "connected | trees | unicyclic")->required();
  sweep_cmd->add_option("--n", sweep_n, "vertex count")->required();
  sweep_cmd->add_flag("--dedup", dedup, "one graph per isomorphism class");
  sweep_cmd->add_flag("--override-cap", override_cap, "allow n above the family cap");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-certificates", max_certificates,
                        "violation certificates kept in the report");
  sweep_cmd->add_option("--claims", sweep_claims, "comma-separated claim names")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--csv", csv_path, "also write per-claim CSV rows to this path");

  std::size_t x_max = 0;
  std::size_t y_max = 0;
  auto* lemma2_cmd = app.add_subcommand("lemma2", "Exact minimization of the cycle-edge bound f(x,y)");
  lemma2_cmd->add_option("--xmax", x_max, "grid bound in x (>= 5)")->required();
  lemma2_cmd->add_option("--ymax", y_max, "grid bound in y (>= 5)")->required();
  lemma2_cmd->add_option("--csv", csv_path, "also write CSV rows to this path");

  GraphInput reduce_graph;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Delete cycle edges down to a spanning unicyclic subgraph");
  reduce_graph.attach(reduce_cmd);
  reduce_cmd->add_option("--csv", csv_path, "also write CSV rows to this path");

  std::vector<std::string> argv_storage(args.rbegin(), args.rend());
  try {
    app.parse(argv_storage);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ReportEnvelope envelope;
    if (index_cmd->parsed()) {
      envelope.command = "index";
      const Graph g = index_graph.load(envelope.inputs);
      envelope.results = index_report(g);
      emit(envelope, csv_path, out);
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      envelope.command = "check";
      const Graph g = check_graph.load(envelope.inputs);
      const std::vector<Claim> claims = parse_claims(check_claims);
      envelope.inputs["claims"] = join_claims(claims);
      const GraphInvariants inv = compute_invariants(g);
      std::vector<BoundCheckResult> results;
      for (Claim c : claims) results.push_back(evaluate_claim(c, inv));
      const bool violated = any_violated(results);
      envelope.results = std::move(results);
      emit(envelope, csv_path, out);
      return violated ? kExitViolation : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      envelope.command = "sweep";
      FamilySpec spec;
      spec.family = family_from_string(family_name);
      spec.n = sweep_n;
      spec.dedup = dedup;
      spec.override_cap = override_cap;
      const std::vector<Claim> claims = parse_claims(sweep_claims);
      envelope.inputs["family"] = to_string(spec.family);
      envelope.inputs["n"] = std::to_string(spec.n);
      envelope.inputs["dedup"] = dedup ? "true" : "false";
      envelope.inputs["claims"] = join_claims(claims);
      // The worker count is deliberately not echoed: reports must not depend on it.
      const auto start = std::chrono::steady_clock::now();
      SweepReport report = sweep(spec, claims, {jobs, max_certificates});
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      err << "sweep: " << report.graphs_examined << " graphs in " << elapsed.count() << " s ("
          << jobs << " jobs)\n";
      const bool violated = report.violations_total > 0;
      envelope.results = std::move(report);
      emit(envelope, csv_path, out);
      return violated ? kExitViolation : kExitOk;
    }
    if (lemma2_cmd->parsed()) {
      envelope.command = "lemma2";
      envelope.inputs["xmax"] = std::to_string(x_max);
      envelope.inputs["ymax"] = std::to_string(y_max);
      envelope.results = lemma2_minimize(x_max, y_max);
      emit(envelope, csv_path, out);
      return kExitOk;
    }
    if (reduce_cmd->parsed()) {
      envelope.command = "reduce";
      const Graph g = reduce_graph.load(envelope.inputs);
      envelope.results = reduction_trace(g);
      emit(envelope, csv_path, out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hradius::cli
