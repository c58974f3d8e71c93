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

#include "hradius/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hradius/formats.hpp"

namespace hradius {

using nlohmann::json;

ReductionTrace reduction_trace(const Graph& g) {
  const std::vector<ReductionStep> steps = unicyclic_reduction_steps(g);
  ReductionTrace trace;
  auto entry = [](std::size_t step, const Graph& graph) {
    ReductionTraceEntry e;
    e.step = step;
    e.harmonic = harmonic_index(graph);
    e.radius = radius(graph);
    e.cyclomatic = cyclomatic_number(graph);
    e.graph6 = to_graph6(graph);
    return e;
  };
  trace.push_back(entry(0, g));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ReductionTraceEntry e = entry(i + 1, steps[i].result);
    e.removed = steps[i].deletion.edge;
    e.delta = steps[i].deletion.delta;
    trace.push_back(std::move(e));
  }
  return trace;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw FormatError("report schema: " + what);
}

json value_to_json(const BoundValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->str();
  return std::get<double>(v);
}

BoundValue value_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  schema_error("expected rational string or number");
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) schema_error("expected rational string");
  return Rational::parse(j.get<std::string>());
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const json& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return out;
}

json check_to_json(const BoundCheckResult& r) {
  return {{"claim", to_string(r.claim)},        {"status", to_string(r.status)},
          {"bound", value_to_json(r.bound)},    {"actual", value_to_json(r.actual)},
          {"slack", value_to_json(r.slack)},    {"note", r.note}};
}

BoundCheckResult check_from_json(const json& j) {
  BoundCheckResult r;
  r.claim = claim_from_string(j.at("claim").get<std::string>());
  r.status = status_from_string(j.at("status").get<std::string>());
  r.bound = value_from_json(j.at("bound"));
  r.actual = value_from_json(j.at("actual"));
  r.slack = value_from_json(j.at("slack"));
  r.note = j.at("note").get<std::string>();
  return r;
}

json index_to_json(const IndexReport& r) {
  return {{"harmonic", r.harmonic.str()},
          {"randic", r.randic},
          {"radius", r.radius},
          {"diameter", r.diameter},
          {"cyclomatic", r.cyclomatic},
          {"class", to_string(r.graph_class.kind)}};
}

IndexReport index_from_json(const json& j) {
  IndexReport r;
  r.harmonic = rational_from_json(j.at("harmonic"));
  r.randic = j.at("randic").get<double>();
  r.radius = j.at("radius").get<std::size_t>();
  r.diameter = j.at("diameter").get<std::size_t>();
  r.cyclomatic = j.at("cyclomatic").get<std::size_t>();
  r.graph_class.kind = graph_kind_from_string(j.at("class").get<std::string>());
  r.graph_class.cyclomatic = r.cyclomatic;
  return r;
}

json sweep_to_json(const SweepReport& r) {
  json claims = json::array();
  for (Claim c : r.claims) claims.push_back(to_string(c));
  json per_claim = json::array();
  for (const ClaimSummary& s : r.summaries) {
    json extremal = nullptr;
    if (s.extremal) {
      extremal = {{"n", s.extremal->n},
                  {"mask", s.extremal->mask},
                  {"edges", edges_to_json(s.extremal->edges)},
                  {"slack", value_to_json(s.extremal->slack)}};
    }
    per_claim.push_back({{"claim", to_string(s.claim)},
                         {"holds_count", s.tally.holds},
                         {"equality_count", s.tally.equality},
                         {"exempt_count", s.tally.exempt},
                         {"violated_count", s.tally.violated},
                         {"skipped_count", s.tally.skipped},
                         {"extremal", extremal}});
  }
  json violations = json::array();
  for (const Certificate& c : r.violations) {
    violations.push_back({{"n", c.n},
                          {"edges", edges_to_json(c.edges)},
                          {"graph6", c.graph6},
                          {"result", check_to_json(c.result)},
                          {"randic_precise", c.randic_precise}});
  }
  return {{"family", to_string(r.spec.family)},
          {"n", r.spec.n},
          {"dedup", r.spec.dedup},
          {"override_cap", r.spec.override_cap},
          {"claims", claims},
          {"graphs_examined", r.graphs_examined},
          {"violations_total", r.violations_total},
          {"per_claim", per_claim},
          {"violations", violations}};
}

SweepReport sweep_from_json(const json& j) {
  SweepReport r;
  r.spec.family = family_from_string(j.at("family").get<std::string>());
  r.spec.n = j.at("n").get<std::size_t>();
  r.spec.dedup = j.at("dedup").get<bool>();
  r.spec.override_cap = j.at("override_cap").get<bool>();
  for (const json& c : j.at("claims")) r.claims.push_back(claim_from_string(c.get<std::string>()));
  r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
  r.violations_total = j.at("violations_total").get<std::uint64_t>();
  for (const json& s : j.at("per_claim")) {
    ClaimSummary summary;
    summary.claim = claim_from_string(s.at("claim").get<std::string>());
    summary.tally.holds = s.at("holds_count").get<std::uint64_t>();
    summary.tally.equality = s.at("equality_count").get<std::uint64_t>();
    summary.tally.exempt = s.at("exempt_count").get<std::uint64_t>();
    summary.tally.violated = s.at("violated_count").get<std::uint64_t>();
    summary.tally.skipped = s.at("skipped_count").get<std::uint64_t>();
    if (const json& e = s.at("extremal"); !e.is_null()) {
      Extremal ext;
      ext.n = e.at("n").get<std::size_t>();
      ext.mask = e.at("mask").get<EdgeMask>();
      ext.edges = edges_from_json(e.at("edges"));
      ext.slack = value_from_json(e.at("slack"));
      summary.extremal = std::move(ext);
    }
    r.summaries.push_back(std::move(summary));
  }
  for (const json& v : j.at("violations")) {
    Certificate c;
    c.n = v.at("n").get<std::size_t>();
    c.edges = edges_from_json(v.at("edges"));
    c.graph6 = v.at("graph6").get<std::string>();
    c.result = check_from_json(v.at("result"));
    c.randic_precise = v.at("randic_precise").get<std::string>();
    r.violations.push_back(std::move(c));
  }
  return r;
}

json lemma2_to_json(const Lemma2Result& r) {
  json points = json::array();
  for (const Lemma2Point& p : r.reference_points) {
    points.push_back({{"x", p.x},
                      {"y", p.y},
                      {"expected", p.expected.str()},
                      {"actual", p.actual.str()},
                      {"match", p.matches()}});
  }
  return {{"x_max", r.x_max},
          {"y_max", r.y_max},
          {"argmin", {r.argmin.first, r.argmin.second}},
          {"min", r.min_value.str()},
          {"monotone_tail", r.monotone_tail},
          {"tail_comparisons", r.tail_comparisons},
          {"reference_points", points},
          {"reference_points_match", r.reference_points_match}};
}

Lemma2Result lemma2_from_json(const json& j) {
  Lemma2Result r;
  r.x_max = j.at("x_max").get<std::size_t>();
  r.y_max = j.at("y_max").get<std::size_t>();
  r.argmin = {j.at("argmin").at(0).get<std::size_t>(), j.at("argmin").at(1).get<std::size_t>()};
  r.min_value = rational_from_json(j.at("min"));
  r.monotone_tail = j.at("monotone_tail").get<bool>();
  r.tail_comparisons = j.at("tail_comparisons").get<std::size_t>();
  for (const json& p : j.at("reference_points")) {
    r.reference_points.push_back({p.at("x").get<std::size_t>(), p.at("y").get<std::size_t>(),
                                  rational_from_json(p.at("expected")),
                                  rational_from_json(p.at("actual"))});
  }
  r.reference_points_match = j.at("reference_points_match").get<bool>();
  return r;
}

json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionTraceEntry& e : trace) {
    json removed = nullptr;
    if (e.removed) removed = {e.removed->u, e.removed->v};
    steps.push_back({{"step", e.step},
                     {"removed", removed},
                     {"delta", e.delta.str()},
                     {"harmonic", e.harmonic.str()},
                     {"radius", e.radius},
                     {"cyclomatic", e.cyclomatic},
                     {"graph6", e.graph6}});
  }
  return {{"steps", steps}};
}

ReductionTrace trace_from_json(const json& j) {
  ReductionTrace trace;
  for (const json& s : j.at("steps")) {
    ReductionTraceEntry e;
    e.step = s.at("step").get<std::size_t>();
    if (const json& r = s.at("removed"); !r.is_null()) {
      e.removed = Edge(r.at(0).get<Vertex>(), r.at(1).get<Vertex>());
    }
    e.delta = rational_from_json(s.at("delta"));
    e.harmonic = rational_from_json(s.at("harmonic"));
    e.radius = s.at("radius").get<std::size_t>();
    e.cyclomatic = s.at("cyclomatic").get<std::size_t>();
    e.graph6 = s.at("graph6").get<std::string>();
    trace.push_back(std::move(e));
  }
  return trace;
}

struct ResultsToJson {
  json operator()(const IndexReport& r) const {
    json j = index_to_json(r);
    j["type"] = "index";
    return j;
  }
  json operator()(const std::vector<BoundCheckResult>& rs) const {
    json checks = json::array();
    for (const auto& r : rs) checks.push_back(check_to_json(r));
    return {{"type", "check"}, {"checks", checks}};
  }
  json operator()(const SweepReport& r) const {
    json j = sweep_to_json(r);
    j["type"] = "sweep";
    return j;
  }
  json operator()(const Lemma2Result& r) const {
    json j = lemma2_to_json(r);
    j["type"] = "lemma2";
    return j;
  }
  json operator()(const ReductionTrace& t) const {
    json j = trace_to_json(t);
    j["type"] = "reduce";
    return j;
  }
};

std::string csv_value(const BoundValue& v) { return to_string(v); }

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string input_or_empty(const ReportEnvelope& env, const std::string& key) {
  const auto it = env.inputs.find(key);
  return it == env.inputs.end() ? std::string() : it->second;
}

}  // namespace

std::string to_json(const ReportEnvelope& envelope, int indent) {
  json inputs = json::object();
  for (const auto& [k, v] : envelope.inputs) inputs[k] = v;
  const json j = {{"command", envelope.command},
                  {"tool_version", envelope.tool_version},
                  {"inputs", inputs},
                  {"results", std::visit(ResultsToJson{}, envelope.results)}};
  return j.dump(indent);
}

ReportEnvelope envelope_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ReportEnvelope env;
    env.command = j.at("command").get<std::string>();
    env.tool_version = j.at("tool_version").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) env.inputs[k] = v.get<std::string>();
    const json& results = j.at("results");
    const std::string type = results.at("type").get<std::string>();
    if (type == "index") {
      env.results = index_from_json(results);
    } else if (type == "check") {
      std::vector<BoundCheckResult> checks;
      for (const json& c : results.at("checks")) checks.push_back(check_from_json(c));
      env.results = std::move(checks);
    } else if (type == "sweep") {
      env.results = sweep_from_json(results);
    } else if (type == "lemma2") {
      env.results = lemma2_from_json(results);
    } else if (type == "reduce") {
      env.results = trace_from_json(results);
    } else {
      schema_error("unknown results type '" + type + "'");
    }
    return env;
  } catch (const json::exception& e) {
    throw FormatError(std::string("report schema: ") + e.what());
  }
}

std::string to_csv(const ReportEnvelope& envelope) {
  std::ostringstream os;
  const std::string g6 = input_or_empty(envelope, "graph6");
  if (const auto* r = std::get_if<IndexReport>(&envelope.results)) {
    os << "graph6,harmonic,randic,radius,diameter,cyclomatic,class\n";
    os << g6 << ',' << r->harmonic.str() << ',' << csv_double(r->randic) << ',' << r->radius
       << ',' << r->diameter << ',' << r->cyclomatic << ',' << to_string(r->graph_class.kind)
       << '\n';
  } else if (const auto* rs = std::get_if<std::vector<BoundCheckResult>>(&envelope.results)) {
    os << "graph6,claim,status,bound,actual,slack\n";
    for (const BoundCheckResult& r : *rs) {
      os << g6 << ',' << to_string(r.claim) << ',' << to_string(r.status) << ','
         << csv_value(r.bound) << ',' << csv_value(r.actual) << ',' << csv_value(r.slack) << '\n';
    }
  } else if (const auto* s = std::get_if<SweepReport>(&envelope.results)) {
    os << "family,n,claim,holds,equality,exempt,violated,skipped,extremal_graph6,"
          "extremal_slack\n";
    for (const ClaimSummary& c : s->summaries) {
      os << to_string(s->spec.family) << ',' << s->spec.n << ',' << to_string(c.claim) << ','
         << c.tally.holds << ',' << c.tally.equality << ',' << c.tally.exempt << ','
         << c.tally.violated << ',' << c.tally.skipped << ',';
      if (c.extremal) {
        os << to_graph6(Graph::from_edges(c.extremal->n, c.extremal->edges)) << ','
           << csv_value(c.extremal->slack);
      } else {
        os << ',';
      }
      os << '\n';
    }
  } else if (const auto* l = std::get_if<Lemma2Result>(&envelope.results)) {
    os << "x,y,kind,value,expected\n";
    os << l->argmin.first << ',' << l->argmin.second << ",minimum," << l->min_value.str()
       << ",\n";
    for (const Lemma2Point& p : l->reference_points) {
      os << p.x << ',' << p.y << ",reference," << p.actual.str() << ',' << p.expected.str()
         << '\n';
    }
  } else if (const auto* t = std::get_if<ReductionTrace>(&envelope.results)) {
    os << "step,removed_u,removed_v,delta,harmonic,radius,cyclomatic,graph6\n";
    for (const ReductionTraceEntry& e : *t) {
      os << e.step << ',';
      if (e.removed) {
        os << e.removed->u << ',' << e.removed->v;
      } else {
        os << ',';
      }
      os << ',' << e.delta.str() << ',' << e.harmonic.str() << ',' << e.radius << ','
         << e.cyclomatic << ',' << e.graph6 << '\n';
    }
  }
  return os.str();
}

}  // namespace hradius
