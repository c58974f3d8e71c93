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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hradius/enumerate.hpp"
#include "hradius/formats.hpp"
#include "oracles.hpp"

using namespace hradius;

namespace {

std::size_t count_family(const FamilySpec& spec) {
  std::size_t count = 0;
  visit_family(spec, [&](const Graph&) { ++count; });
  return count;
}

// Number of isomorphism classes by pairwise brute-force comparison.
std::size_t oracle_classes(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](const Graph& r) { return oracle::isomorphic(g, r); });
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace

TEST_CASE("family names and caps") {
  for (Family f : {Family::kConnectedGraphs, Family::kLabeledTrees, Family::kUnicyclicGraphs}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK(to_string(Family::kConnectedGraphs) == "connected");
  CHECK_THROWS(family_from_string("forests"));
  CHECK(family_cap(Family::kConnectedGraphs) == 8);
  CHECK(family_cap(Family::kLabeledTrees) == 10);
  CHECK(family_cap(Family::kUnicyclicGraphs) == 9);

  CHECK_NOTHROW(validate({Family::kConnectedGraphs, 8}));
  CHECK_THROWS_AS(validate({Family::kConnectedGraphs, 9}), GraphError);
  CHECK_NOTHROW(validate({Family::kConnectedGraphs, 9, false, true}));
  CHECK_THROWS_AS(validate({Family::kConnectedGraphs, 12, false, true}), GraphError);
  CHECK_THROWS_AS(validate({Family::kUnicyclicGraphs, 2}), GraphError);
  CHECK_THROWS_AS(validate({Family::kLabeledTrees, 0}), GraphError);
}

TEST_CASE("masks round trip") {
  const Graph p4 = Graph::path(4);
  // Pair (i<j) sits at bit j(j-1)/2 + i.
  CHECK(edge_mask(p4) == ((1u << 0) | (1u << 2) | (1u << 5)));
  CHECK(graph_from_mask(4, edge_mask(p4)) == p4);
  CHECK_THROWS_AS(edge_mask(Graph::path(12)), GraphError);
}

TEST_CASE("labeled connected counts") {
  const auto expected = oracle::connected_labeled_counts(7);
  CHECK(expected[1] == 1);
  CHECK(expected[7] == 1866256);
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(count_family({Family::kConnectedGraphs, n}) == expected[n]);
  }
}

TEST_CASE("connected graphs are distinct and connected") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<EdgeMask> masks;
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) {
      CHECK(g.order() == n);
      CHECK(oracle::components(n, g.edges()) == 1);
      masks.insert(edge_mask(g));
    });
    CHECK(masks.size() == oracle::connected_labeled_counts(n)[n]);
  }
}

TEST_CASE("labeled trees") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const std::uint64_t cayley = n == 1 ? 1 : oracle::ipow(n, n - 2);
    std::set<EdgeMask> masks;
    visit_labeled_trees({Family::kLabeledTrees, n}, [&](const Graph& g) {
      REQUIRE(g.size() + 1 == n);
      REQUIRE(oracle::components(n, g.edges()) == 1);
      masks.insert(edge_mask(g));
    });
    CHECK(masks.size() == cayley);
  }
}

TEST_CASE("tree_from_pruefer") {
  const std::vector<Vertex> star_seq = {0, 0, 0};
  CHECK(tree_from_pruefer(5, star_seq) == Graph::star(4));
  const std::vector<Vertex> seq = {3, 3, 3, 4};
  // Leaves 0, 1, 2 attach to 3, then 3 to 4, then 4 to 5.
  CHECK(tree_from_pruefer(6, seq) ==
        Graph::from_edges(6, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(tree_from_pruefer(2, {}) == Graph::path(2));
  const std::vector<Vertex> bad = {7};
  CHECK_THROWS_AS(tree_from_pruefer(3, bad), GraphError);
  CHECK_THROWS_AS(tree_from_pruefer(4, bad), GraphError);
}

TEST_CASE("labeled unicyclic counts") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CAPTURE(n);
    std::set<EdgeMask> masks;
    visit_unicyclic_graphs({Family::kUnicyclicGraphs, n}, [&](const Graph& g) {
      REQUIRE(g.size() == n);
      REQUIRE(oracle::components(n, g.edges()) == 1);
      masks.insert(edge_mask(g));
    });
    CHECK(masks.size() == oracle::connected_with_edge_count(n, n));
  }
}

TEST_CASE("canonical form is an isomorphism invariant") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) {
      if (rng() % 8 != 0) return;
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = g.permuted(perm);
      const Graph c = canonical_form(g);
      REQUIRE(canonical_form(h) == c);
      REQUIRE(oracle::isomorphic(c, g));
      REQUIRE(canonical_mask(n, edge_mask(g)) == edge_mask(c));
    });
  }
}

TEST_CASE("dedup yields one graph per isomorphism class") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto all = connected_graphs({Family::kConnectedGraphs, n});
    const auto reps = connected_graphs({Family::kConnectedGraphs, n, true});
    CHECK(reps.size() == oracle_classes(all));
    CHECK(oracle_classes(reps) == reps.size());
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto all = unicyclic_graphs({Family::kUnicyclicGraphs, n});
    const auto reps = unicyclic_graphs({Family::kUnicyclicGraphs, n, true});
    CHECK(reps.size() == oracle_classes(all));
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto all = labeled_trees({Family::kLabeledTrees, n});
    const auto reps = labeled_trees({Family::kLabeledTrees, n, true});
    CHECK(reps.size() == oracle_classes(reps));
    std::set<EdgeMask> canon;
    for (const Graph& t : all) canon.insert(canonical_mask(n, edge_mask(t)));
    CHECK(reps.size() == canon.size());
  }
}

TEST_CASE("unlabeled counts at n = 6, 7") {
  // Connected graphs on 6 and 7 vertices up to isomorphism.
  CHECK(count_family({Family::kConnectedGraphs, 6, true}) == 112);
  CHECK(count_family({Family::kConnectedGraphs, 7, true}) == 853);
  CHECK(count_family({Family::kLabeledTrees, 9, true}) == 47);
}

TEST_CASE("claim applicability") {
  const std::vector<Claim> t2 = {Claim::kTheorem2};
  const std::vector<Claim> t1 = {Claim::kTheorem1};
  const std::vector<Claim> none;
  CHECK_THROWS_AS(check_claims_applicable(Family::kLabeledTrees, t2), GraphError);
  CHECK_THROWS_AS(check_claims_applicable(Family::kUnicyclicGraphs, t1), GraphError);
  CHECK_THROWS_AS(check_claims_applicable(Family::kConnectedGraphs, none), GraphError);
  CHECK_NOTHROW(check_claims_applicable(Family::kConnectedGraphs, t1));
}

TEST_CASE("sweep tallies match per-graph checks") {
  const std::vector<Claim> claims(kAllClaims.begin(), kAllClaims.end());
  for (std::size_t n = 1; n <= 6; ++n) {
    const FamilySpec spec{Family::kConnectedGraphs, n};
    std::vector<ClaimTally> expected(claims.size());
    visit_family(spec, [&](const Graph& g) {
      const GraphClass cls = classify(g);
      for (std::size_t i = 0; i < claims.size(); ++i) {
        if (!claim_applies(claims[i], cls)) {
          ++expected[i].skipped;
          continue;
        }
        switch (check_claim(claims[i], g).status) {
          case Status::kHolds: ++expected[i].holds; break;
          case Status::kHoldsWithEquality: ++expected[i].equality; break;
          case Status::kExempt: ++expected[i].exempt; break;
          case Status::kViolated: ++expected[i].violated; break;
        }
      }
    });
    const SweepReport report = sweep(spec, claims);
    CAPTURE(n);
    CHECK(report.graphs_examined == oracle::connected_labeled_counts(n)[n]);
    REQUIRE(report.summaries.size() == claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) {
      CAPTURE(to_string(claims[i]));
      CHECK(report.summaries[i].claim == claims[i]);
      CHECK(report.summaries[i].tally == expected[i]);
    }
  }
}

TEST_CASE("sweep extremal witnesses") {
  const std::vector<Claim> claims = {Claim::kTheorem2};
  const SweepReport report = sweep({Family::kUnicyclicGraphs, 6}, claims);
  const auto& s = report.summaries.at(0);
  CHECK(s.tally.equality == 60);
  CHECK(s.tally.violated == 0);
  REQUIRE(s.extremal.has_value());
  CHECK(std::get<Rational>(s.extremal->slack) == Rational(0));
  const Graph w = Graph::from_edges(6, s.extremal->edges);
  CHECK(classify(w).kind == GraphKind::kEvenCycle);
  CHECK(edge_mask(w) == s.extremal->mask);
}

TEST_CASE("sweep is deterministic across worker counts") {
  const std::vector<Claim> claims(kAllClaims.begin() + 2, kAllClaims.end());
  const FamilySpec spec{Family::kConnectedGraphs, 6};
  const SweepReport one = sweep(spec, claims, {1, 100});
  const SweepReport four = sweep(spec, claims, {4, 100});
  CHECK(one == four);
}

TEST_CASE("sweep certificates replay") {
  // K_1 is a path with H = r = 0, below the strict tree bound.
  const std::vector<Claim> claims = {Claim::kTheorem1};
  const SweepReport report = sweep({Family::kLabeledTrees, 1}, claims);
  CHECK(report.violations_total == 1);
  REQUIRE(report.violations.size() == 1);
  const Certificate& cert = report.violations[0];
  CHECK(cert.graph6 == "@");
  CHECK(cert.result.status == Status::kViolated);
  CHECK(replay(cert));

  Certificate tampered = cert;
  tampered.result.slack = Rational(1);
  CHECK_FALSE(replay(tampered));
  Certificate wrong_graph = cert;
  wrong_graph.graph6 = "A_";
  CHECK_FALSE(replay(wrong_graph));
}

TEST_CASE("certificate limit") {
  const std::vector<Claim> claims = {Claim::kTheorem1};
  const SweepReport report = sweep({Family::kLabeledTrees, 1}, claims, {1, 0});
  CHECK(report.violations_total == 1);
  CHECK(report.violations.empty());
}
