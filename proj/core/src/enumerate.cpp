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

#include "hradius/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "hradius/formats.hpp"
#include "hradius/indices.hpp"
#include "small_graph.hpp"

namespace hradius {

using detail::pair_bit;
using detail::pair_count;
using detail::SmallGraph;

std::string to_string(Family family) {
  switch (family) {
    case Family::kConnectedGraphs: return "connected";
    case Family::kLabeledTrees: return "trees";
    case Family::kUnicyclicGraphs: return "unicyclic";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "connected" || name == "ConnectedGraphs") return Family::kConnectedGraphs;
  if (name == "trees" || name == "tree" || name == "LabeledTrees") return Family::kLabeledTrees;
  if (name == "unicyclic" || name == "UnicyclicGraphs") return Family::kUnicyclicGraphs;
  throw GraphError("unknown family '" + name + "' (expected connected, trees, unicyclic)");
}

std::size_t family_cap(Family family) {
  switch (family) {
    case Family::kConnectedGraphs: return 8;
    case Family::kLabeledTrees: return 10;
    case Family::kUnicyclicGraphs: return 9;
  }
  return 0;
}

void validate(const FamilySpec& spec) {
  const std::size_t min_n = spec.family == Family::kUnicyclicGraphs ? 3 : 1;
  if (spec.n < min_n) {
    throw GraphError(to_string(spec.family) + " needs n >= " + std::to_string(min_n));
  }
  if (spec.n > kMaxEnumerationOrder) {
    throw GraphError("enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  if (!spec.override_cap && spec.n > family_cap(spec.family)) {
    throw GraphError(to_string(spec.family) + " is capped at n = " +
                     std::to_string(family_cap(spec.family)) + " without an override");
  }
}

EdgeMask edge_mask(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw GraphError("edge masks support at most " + std::to_string(kMaxEnumerationOrder) +
                     " vertices");
  }
  EdgeMask mask = 0;
  for (const Edge& e : g.edges()) mask |= EdgeMask{1} << pair_bit(e.u, e.v);
  return mask;
}

Graph graph_from_mask(std::size_t n, EdgeMask mask) {
  if (n > kMaxEnumerationOrder) throw GraphError("mask graphs support n <= 11");
  if (pair_count(n) < 64 && (mask >> pair_count(n)) != 0) {
    throw GraphError("edge mask has bits beyond C(n,2)");
  }
  std::vector<Edge> edges;
  for (EdgeMask m = mask; m != 0; m &= m - 1) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(m));
    edges.emplace_back(detail::kPairs.lo[bit], detail::kPairs.hi[bit]);
  }
  return Graph::from_edges(n, edges);
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 1 || n > kMaxEnumerationOrder) throw GraphError("tree order out of range");
  if (sequence.size() != (n >= 2 ? n - 2 : 0)) {
    throw GraphError("Pruefer sequence must have length n - 2");
  }
  std::array<std::uint8_t, 16> digits{};
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] >= n) throw GraphError("Pruefer label out of range");
    digits[i] = static_cast<std::uint8_t>(sequence[i]);
  }
  return graph_from_mask(n, detail::pruefer_to_mask(n, digits.data()));
}

namespace {

std::uint64_t index_space_size(const FamilySpec& spec) {
  if (spec.family == Family::kConnectedGraphs) {
    return std::uint64_t{1} << pair_count(spec.n);
  }
  std::uint64_t size = 1;
  for (std::size_t i = 2; i < spec.n; ++i) size *= spec.n;
  return size;
}

// Pruefer sequences with rank in [lo, hi), rank = base-n value of the digits.
template <typename Emit>
void for_each_pruefer(std::size_t n, std::uint64_t lo, std::uint64_t hi, Emit&& emit) {
  std::array<std::uint8_t, 16> digits{};
  const std::size_t len = n >= 2 ? n - 2 : 0;
  std::uint64_t rest = lo;
  for (std::size_t i = len; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(rest % n);
    rest /= n;
  }
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    emit(detail::pruefer_to_mask(n, digits.data()));
    for (std::size_t i = len; i-- > 0;) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
}

// parent[root][v]: predecessor of v on the tree path from root.
using ParentTable = std::array<std::array<std::uint8_t, 16>, 16>;

void fill_parents(const SmallGraph& tree, ParentTable& parent) {
  for (std::size_t root = 0; root < tree.n; ++root) {
    std::array<std::uint8_t, 16> queue{};
    std::size_t head = 0;
    std::size_t tail = 0;
    detail::Row seen = static_cast<detail::Row>(1u << root);
    queue[tail++] = static_cast<std::uint8_t>(root);
    parent[root][root] = static_cast<std::uint8_t>(root);
    while (head < tail) {
      const std::size_t x = queue[head++];
      for (detail::Row f = static_cast<detail::Row>(tree.rows[x] & ~seen); f != 0;
           f &= static_cast<detail::Row>(f - 1)) {
        const auto y = static_cast<std::size_t>(std::countr_zero(f));
        parent[root][y] = static_cast<std::uint8_t>(x);
        queue[tail++] = static_cast<std::uint8_t>(y);
      }
      seen |= tree.rows[x];
    }
  }
}

// (tree, a-b) is the canonical witness of tree + ab iff ab is the
// lexicographically smallest edge of the cycle it closes.
bool closes_canonically(const ParentTable& parent, std::size_t a, std::size_t b) {
  const Edge added(static_cast<Vertex>(a), static_cast<Vertex>(b));
  for (std::size_t v = b; v != a;) {
    const std::size_t p = parent[a][v];
    if (Edge(static_cast<Vertex>(p), static_cast<Vertex>(v)) < added) return false;
    v = p;
  }
  return true;
}

// Calls emit(mask, graph) for family members whose index lies in [lo, hi).
template <typename Emit>
void generate_range(const FamilySpec& spec, std::uint64_t lo, std::uint64_t hi, Emit&& emit) {
  const std::size_t n = spec.n;
  auto accept = [&](EdgeMask mask, const SmallGraph& g) {
    if (spec.dedup && !detail::is_canonical(n, mask)) return;
    emit(mask, g);
  };
  switch (spec.family) {
    case Family::kConnectedGraphs:
      for (EdgeMask mask = lo; mask < hi; ++mask) {
        const SmallGraph g = SmallGraph::from_mask(n, mask);
        if (g.connected()) accept(mask, g);
      }
      break;
    case Family::kLabeledTrees:
      for_each_pruefer(n, lo, hi, [&](EdgeMask mask) {
        accept(mask, SmallGraph::from_mask(n, mask));
      });
      break;
    case Family::kUnicyclicGraphs: {
      ParentTable parent{};
      for_each_pruefer(n, lo, hi, [&](EdgeMask tree_mask) {
        const SmallGraph tree = SmallGraph::from_mask(n, tree_mask);
        fill_parents(tree, parent);
        for (std::size_t bit = 0; bit < pair_count(n); ++bit) {
          const EdgeMask e = EdgeMask{1} << bit;
          if (tree_mask & e) continue;
          if (!closes_canonically(parent, detail::kPairs.lo[bit], detail::kPairs.hi[bit])) {
            continue;
          }
          const EdgeMask mask = tree_mask | e;
          accept(mask, SmallGraph::from_mask(n, mask));
        }
      });
      break;
    }
  }
}

void visit_checked(const FamilySpec& spec, Family expected, const GraphVisitor& visit) {
  if (spec.family != expected) {
    throw GraphError("family spec is " + to_string(spec.family) + ", expected " +
                     to_string(expected));
  }
  visit_family(spec, visit);
}

std::vector<Graph> collect(const FamilySpec& spec, Family expected) {
  std::vector<Graph> out;
  visit_checked(spec, expected, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace

void visit_family(const FamilySpec& spec, const GraphVisitor& visit) {
  validate(spec);
  generate_range(spec, 0, index_space_size(spec),
                 [&](EdgeMask mask, const SmallGraph&) { visit(graph_from_mask(spec.n, mask)); });
}

void visit_connected_graphs(const FamilySpec& spec, const GraphVisitor& visit) {
  visit_checked(spec, Family::kConnectedGraphs, visit);
}

void visit_labeled_trees(const FamilySpec& spec, const GraphVisitor& visit) {
  visit_checked(spec, Family::kLabeledTrees, visit);
}

void visit_unicyclic_graphs(const FamilySpec& spec, const GraphVisitor& visit) {
  visit_checked(spec, Family::kUnicyclicGraphs, visit);
}

std::vector<Graph> connected_graphs(const FamilySpec& spec) {
  return collect(spec, Family::kConnectedGraphs);
}

std::vector<Graph> labeled_trees(const FamilySpec& spec) {
  return collect(spec, Family::kLabeledTrees);
}

std::vector<Graph> unicyclic_graphs(const FamilySpec& spec) {
  return collect(spec, Family::kUnicyclicGraphs);
}

// ---------------------------------------------------------------------------
// Sweep

void check_claims_applicable(Family family, std::span<const Claim> claims) {
  if (claims.empty()) throw GraphError("sweep needs at least one claim");
  for (Claim c : claims) {
    const bool ok =
        !((family == Family::kLabeledTrees &&
           (c == Claim::kTheorem2 || c == Claim::kTheorem3)) ||
          (family == Family::kUnicyclicGraphs && c == Claim::kTheorem1));
    if (!ok) {
      throw GraphError(to_string(c) + " does not apply to the " + to_string(family) +
                       " family");
    }
  }
}

namespace {

std::int64_t lcm_up_to(std::size_t limit) {
  std::int64_t l = 1;
  for (std::size_t i = 2; i <= limit; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return l;
}

std::int64_t scaled(const Rational& q, std::int64_t scale) {
  const Rational s = q * Rational(scale);
  if (!s.is_integer() || !s.raw().get_num().fits_slong_p()) {
    throw GraphError("threshold " + q.str() + " is not representable at scale " +
                     std::to_string(scale));
  }
  return s.raw().get_num().get_si();
}

// Exact values are integers over the common denominator `scale`:
// every 2/(d_u + d_v) with d_u + d_v <= 2n - 2, and the constants
// 1/15, 1/6, 31/105 of the claim thresholds.
struct Evaluator {
  std::size_t n = 0;
  std::int64_t scale = 1;
  std::vector<Claim> claims;
  std::array<std::int64_t, 32> harmonic_term{};
  std::array<double, 32> harmonic_float_term{};
  std::array<std::array<double, 16>, 16> randic_term{};
  std::size_t max_k = 0;
  // thresholds[c][r * (max_k + 1) + k]
  std::vector<std::vector<std::int64_t>> thresholds;
  std::int64_t sixth = 0;

  Evaluator(std::size_t order, std::span<const Claim> claim_list)
      : n(order), claims(claim_list.begin(), claim_list.end()) {
    scale = lcm_up_to(std::max<std::size_t>(2 * n, 8));
    for (std::size_t s = 1; s < harmonic_term.size(); ++s) {
      harmonic_term[s] = 2 * scale / static_cast<std::int64_t>(s);
      harmonic_float_term[s] = 2.0 / static_cast<double>(s);
    }
    for (std::size_t a = 1; a < 16; ++a) {
      for (std::size_t b = 1; b < 16; ++b) {
        randic_term[a][b] = 1.0 / std::sqrt(static_cast<double>(a) * static_cast<double>(b));
      }
    }
    sixth = scale / 6;
    max_k = pair_count(n) + 1;
    thresholds.resize(claims.size());
    for (std::size_t c = 0; c < claims.size(); ++c) {
      if (!is_exact_claim(claims[c])) continue;
      auto& table = thresholds[c];
      table.assign((n + 1) * (max_k + 1), 0);
      for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t k = 0; k <= max_k; ++k) {
          if (claims[c] == Claim::kTheorem3 && k == 0) continue;
          table[r * (max_k + 1) + k] = scaled(exact_threshold(claims[c], r, k), scale);
        }
      }
    }
  }
};

struct LocalExtremal {
  bool set = false;
  std::int64_t exact_slack = 0;
  double float_slack = 0.0;
  EdgeMask mask = 0;
};

struct PendingViolation {
  std::size_t claim_index;
  EdgeMask mask;
};

struct ChunkResult {
  std::uint64_t examined = 0;
  std::vector<ClaimTally> tallies;
  std::vector<LocalExtremal> extremals;
  std::vector<PendingViolation> violations;
  std::uint64_t violations_total = 0;
};

Rational tolerance_rational(Claim claim) {
  // kRandicTolerance = 1e-9, kIndexTolerance = 1e-12
  return claim == Claim::kRgeH ? Rational(1, 1'000'000'000'000) : Rational(1, 1'000'000'000);
}

// Recheck a double-precision Randic violation at 256 bits.
bool certify_randic_violation(Claim claim, std::size_t n, EdgeMask mask) {
  const Graph g = graph_from_mask(n, mask);
  Rational bound;
  if (claim == Claim::kRgeH) {
    bound = harmonic_index(g);
  } else {
    const auto r = static_cast<std::int64_t>(radius(g));
    bound = claim == Claim::kConjecture1 ? Rational(r - 1) : Rational(r);
  }
  return randic_compare(g, bound - tolerance_rational(claim)) < 0;
}

void evaluate_graph(const Evaluator& ev, EdgeMask mask, const SmallGraph& g,
                    std::size_t max_certificates, ChunkResult& out) {
  const std::size_t n = ev.n;
  std::array<std::size_t, 16> deg{};
  std::size_t degree_sum = 0;
  std::size_t lo = n;
  std::size_t hi = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    degree_sum += deg[v];
    lo = std::min(lo, deg[v]);
    hi = std::max(hi, deg[v]);
  }
  const std::size_t m = degree_sum / 2;
  const std::size_t k = m + 1 - n;
  const GraphClass cls = classify_connected(n, k, hi, lo);
  const std::size_t r = g.radius();

  std::int64_t harmonic = 0;
  double harmonic_float = 0.0;
  double randic = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (detail::Row f = static_cast<detail::Row>(g.rows[u] >> (u + 1) << (u + 1)); f != 0;
         f &= static_cast<detail::Row>(f - 1)) {
      const auto v = static_cast<std::size_t>(std::countr_zero(f));
      harmonic += ev.harmonic_term[deg[u] + deg[v]];
      harmonic_float += ev.harmonic_float_term[deg[u] + deg[v]];
      randic += ev.randic_term[deg[u]][deg[v]];
    }
  }

  ++out.examined;
  for (std::size_t c = 0; c < ev.claims.size(); ++c) {
    const Claim claim = ev.claims[c];
    ClaimTally& tally = out.tallies[c];
    if (!claim_applies(claim, cls)) {
      ++tally.skipped;
      continue;
    }
    Status status;
    std::int64_t exact_slack = 0;
    double float_slack = 0.0;
    if (is_exact_claim(claim)) {
      exact_slack = harmonic - ev.thresholds[c][r * (ev.max_k + 1) + k];
      bool closed_form_ok = true;
      if (cls.kind == GraphKind::kEvenPath && n >= 3) {
        closed_form_ok = harmonic == static_cast<std::int64_t>(r) * ev.scale - ev.sixth;
      }
      const int sign = exact_slack < 0 ? -1 : (exact_slack > 0 ? 1 : 0);
      status = decide_exact_status(claim, sign, cls, closed_form_ok);
    } else {
      const double bound =
          claim == Claim::kRgeH ? harmonic_float : randic_threshold(claim, r);
      float_slack = randic - bound;
      status = decide_randic_status(claim, float_slack, cls);
      if (status == Status::kViolated && !certify_randic_violation(claim, n, mask)) {
        status = Status::kHolds;
      }
    }

    switch (status) {
      case Status::kHolds: ++tally.holds; break;
      case Status::kHoldsWithEquality: ++tally.equality; break;
      case Status::kExempt: ++tally.exempt; continue;
      case Status::kViolated:
        ++tally.violated;
        ++out.violations_total;
        if (out.violations.size() < max_certificates) out.violations.push_back({c, mask});
        break;
    }

    LocalExtremal& ext = out.extremals[c];
    const bool better =
        !ext.set ||
        (is_exact_claim(claim)
             ? (exact_slack < ext.exact_slack ||
                (exact_slack == ext.exact_slack && mask < ext.mask))
             : (float_slack < ext.float_slack ||
                (float_slack == ext.float_slack && mask < ext.mask)));
    if (better) {
      ext.set = true;
      ext.exact_slack = exact_slack;
      ext.float_slack = float_slack;
      ext.mask = mask;
    }
  }
}

void merge_into(ChunkResult& total, const ChunkResult& part, const Evaluator& ev,
                std::size_t max_certificates) {
  total.examined += part.examined;
  total.violations_total += part.violations_total;
  for (std::size_t c = 0; c < ev.claims.size(); ++c) {
    ClaimTally& t = total.tallies[c];
    const ClaimTally& p = part.tallies[c];
    t.holds += p.holds;
    t.equality += p.equality;
    t.exempt += p.exempt;
    t.violated += p.violated;
    t.skipped += p.skipped;

    const LocalExtremal& pe = part.extremals[c];
    LocalExtremal& te = total.extremals[c];
    if (!pe.set) continue;
    const bool exact = is_exact_claim(ev.claims[c]);
    const bool better =
        !te.set ||
        (exact ? (pe.exact_slack < te.exact_slack ||
                  (pe.exact_slack == te.exact_slack && pe.mask < te.mask))
               : (pe.float_slack < te.float_slack ||
                  (pe.float_slack == te.float_slack && pe.mask < te.mask)));
    if (better) te = pe;
  }
  for (const PendingViolation& v : part.violations) {
    if (total.violations.size() >= max_certificates) break;
    total.violations.push_back(v);
  }
}

ChunkResult empty_result(std::size_t claims) {
  ChunkResult r;
  r.tallies.resize(claims);
  r.extremals.resize(claims);
  return r;
}

}  // namespace

SweepReport sweep(const FamilySpec& spec, std::span<const Claim> claims,
                  const SweepOptions& options) {
  validate(spec);
  check_claims_applicable(spec.family, claims);
  const Evaluator ev(spec.n, claims);
  const std::uint64_t space = index_space_size(spec);
  // Chunk boundaries depend only on the index space, never on the worker
  // count; for connected graphs they split on the high-order edge bits.
  const std::uint64_t chunks = std::min<std::uint64_t>(256, space);
  std::vector<ChunkResult> results(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t lo = space / chunks * c + std::min(c, space % chunks);
    const std::uint64_t hi = lo + space / chunks + (c < space % chunks ? 1 : 0);
    ChunkResult local = empty_result(claims.size());
    generate_range(spec, lo, hi, [&](EdgeMask mask, const SmallGraph& g) {
      evaluate_graph(ev, mask, g, options.max_certificates, local);
    });
    results[c] = std::move(local);
  };

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < std::min<std::uint64_t>(jobs, chunks); ++w) {
      workers.emplace_back([&] {
        try {
          for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  ChunkResult total = empty_result(claims.size());
  for (const ChunkResult& part : results) merge_into(total, part, ev, options.max_certificates);

  SweepReport report;
  report.spec = spec;
  report.claims.assign(claims.begin(), claims.end());
  report.graphs_examined = total.examined;
  report.violations_total = total.violations_total;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    ClaimSummary summary;
    summary.claim = claims[c];
    summary.tally = total.tallies[c];
    const LocalExtremal& ext = total.extremals[c];
    if (ext.set) {
      Extremal e;
      e.n = spec.n;
      e.mask = ext.mask;
      e.edges = graph_from_mask(spec.n, ext.mask).edges();
      if (is_exact_claim(claims[c])) {
        e.slack = Rational(ext.exact_slack, ev.scale);
      } else {
        e.slack = ext.float_slack;
      }
      summary.extremal = std::move(e);
    }
    report.summaries.push_back(std::move(summary));
  }
  for (const PendingViolation& v : total.violations) {
    const Graph g = graph_from_mask(spec.n, v.mask);
    Certificate cert;
    cert.n = spec.n;
    cert.edges = g.edges();
    cert.graph6 = to_graph6(g);
    cert.result = check_claim(claims[v.claim_index], g);
    if (!is_exact_claim(claims[v.claim_index])) cert.randic_precise = randic_index_decimal(g);
    report.violations.push_back(std::move(cert));
  }
  return report;
}

bool replay(const Certificate& certificate) {
  const Graph g = Graph::from_edges(certificate.n, certificate.edges);
  if (!certificate.graph6.empty() && parse_graph6(certificate.graph6) != g) return false;
  const BoundCheckResult again = check_claim(certificate.result.claim, g);
  return again.status == Status::kViolated && again.status == certificate.result.status &&
         again.bound == certificate.result.bound && again.actual == certificate.result.actual &&
         again.slack == certificate.result.slack;
}

}  // namespace hradius
