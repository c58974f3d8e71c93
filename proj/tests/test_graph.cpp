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

#include "hradius/enumerate.hpp"
#include "hradius/graph.hpp"
#include "oracles.hpp"

using namespace hradius;

namespace {

Graph paw() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

std::vector<Graph> small_connected(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) { out.push_back(g); });
  }
  return out;
}

}  // namespace

TEST_CASE("build_graph examples") {
  const Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(c3.order() == 3);
  CHECK(c3.size() == 3);
  CHECK(c3 == Graph::cycle(3));

  const Graph p2 = Graph::from_edges(2, {{0, 1}});
  CHECK(p2.size() == 1);
  CHECK(p2 == Graph::path(2));

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
}

TEST_CASE("graph invariants of construction") {
  for (const Graph& g : small_connected(5)) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nbrs = g.neighbors(v);
      degree_sum += nbrs.size();
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
      CHECK(std::find(nbrs.begin(), nbrs.end(), v) == nbrs.end());
      for (Vertex w : nbrs) CHECK(g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.size());
  }
}

TEST_CASE("edge surgery") {
  const Graph p3 = Graph::path(3);
  const Graph c3 = p3.with_edge({0, 2});
  CHECK(c3 == Graph::cycle(3));
  CHECK(c3.without_edge({2, 0}) == p3);
  CHECK_THROWS_AS(p3.with_edge({0, 1}), GraphError);
  CHECK_THROWS_AS(p3.without_edge({0, 2}), GraphError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Graph::cycle(3)));
  CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph::empty(1)));
  CHECK_THROWS_AS(is_connected(Graph::empty(0)), GraphError);
}

TEST_CASE("distance_profile examples") {
  const auto p4 = distance_profile(Graph::path(4));
  CHECK(p4.radius == 2);
  CHECK(p4.diameter == 3);
  CHECK(p4.eccentricity == std::vector<std::size_t>{3, 2, 2, 3});

  const auto c6 = distance_profile(Graph::cycle(6));
  CHECK(c6.radius == 3);
  CHECK(c6.diameter == 3);

  const auto k1 = distance_profile(Graph::empty(1));
  CHECK(k1.radius == 0);
  CHECK(k1.diameter == 0);

  CHECK_THROWS_AS(distance_profile(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("radius of paths and cycles") {
  for (std::size_t n = 1; n <= 60; ++n) {
    CHECK(radius(Graph::path(n)) == n / 2);
    if (n >= 3) CHECK(radius(Graph::cycle(n)) == n / 2);
  }
}

TEST_CASE("distance profile agrees with Floyd-Warshall and its bounds") {
  for (const Graph& g : small_connected(6)) {
    const auto profile = distance_profile(g);
    const auto d = oracle::all_pairs(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(profile.eccentricity[v] == *std::max_element(d[v].begin(), d[v].end()));
    }
    CHECK(profile.radius <= profile.diameter);
    CHECK(profile.diameter <= 2 * profile.radius);
  }
}

TEST_CASE("distance profile is permutation invariant") {
  std::mt19937 rng(7);
  for (const Graph& g : small_connected(6)) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto before = distance_profile(g);
    const auto after = distance_profile(g.permuted(perm));
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(after.eccentricity[perm[v]] == before.eccentricity[v]);
    }
    CHECK(after.radius == before.radius);
    CHECK(after.diameter == before.diameter);
  }
}

TEST_CASE("cyclomatic_number") {
  CHECK(cyclomatic_number(Graph::star(5)) == 0);
  CHECK(cyclomatic_number(Graph::path(7)) == 0);
  CHECK(cyclomatic_number(Graph::cycle(5)) == 1);
  CHECK(cyclomatic_number(Graph::complete(4)) == 3);
  CHECK_THROWS_AS(cyclomatic_number(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("classify") {
  CHECK(classify(Graph::path(4)).kind == GraphKind::kEvenPath);
  CHECK(classify(Graph::path(5)).kind == GraphKind::kOddPath);
  CHECK(classify(Graph::path(2)).kind == GraphKind::kEvenPath);
  CHECK(classify(Graph::empty(1)).kind == GraphKind::kOddPath);
  CHECK(classify(Graph::star(3)).kind == GraphKind::kTree);
  CHECK(classify(Graph::cycle(4)).kind == GraphKind::kEvenCycle);
  CHECK(classify(Graph::cycle(5)).kind == GraphKind::kOddCycle);

  const GraphClass p = classify(paw());
  CHECK(p.kind == GraphKind::kUnicyclic);
  CHECK(p.cyclomatic == 1);

  const GraphClass k4 = classify(Graph::complete(4));
  CHECK(k4.kind == GraphKind::kGeneral);
  CHECK(k4.cyclomatic == 3);

  CHECK_THROWS_AS(classify(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("cyclomatic number zero exactly for tree classes") {
  for (const Graph& g : small_connected(6)) {
    const GraphClass cls = classify(g);
    CHECK((cyclomatic_number(g) == 0) == cls.is_tree());
    CHECK((cyclomatic_number(g) == 1) == cls.is_unicyclic());
  }
}

TEST_CASE("class names round trip") {
  for (GraphKind k : {GraphKind::kTree, GraphKind::kEvenPath, GraphKind::kOddPath,
                      GraphKind::kEvenCycle, GraphKind::kOddCycle, GraphKind::kUnicyclic,
                      GraphKind::kGeneral}) {
    CHECK(graph_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(graph_kind_from_string("Forest"), GraphError);
}
