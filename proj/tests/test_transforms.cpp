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
#include <vector>

#include "hradius/enumerate.hpp"
#include "hradius/indices.hpp"
#include "hradius/transforms.hpp"
#include "oracles.hpp"

using namespace hradius;

namespace {

std::vector<Edge> path_edges(Vertex k) {
  std::vector<Edge> out;
  for (Vertex i = 0; i + 1 < k; ++i) out.emplace_back(i, i + 1);
  return out;
}

// Graph on n vertices: a path on k vertices plus extra edges.
Graph path_plus(std::size_t n, Vertex k, std::vector<Edge> extra) {
  std::vector<Edge> edges = path_edges(k);
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges(n, edges);
}

struct AddEdgeFixture {
  Graph base;
  Edge added;
  Rational delta;
};

}  // namespace

TEST_CASE("pendant_delta_bound") {
  CHECK(pendant_delta_bound(1) == Rational(1, 3));
  CHECK(pendant_delta_bound(2) == Rational(1, 6));
  CHECK(pendant_delta_bound(3) == Rational(1, 10));
  CHECK_THROWS_AS(pendant_delta_bound(0), GraphError);
}

TEST_CASE("pendant fixtures attain the bound") {
  const Graph p2 = Graph::path(2);
  const Graph p3 = add_pendant(p2, 1);
  CHECK(p3 == Graph::path(3));
  CHECK(harmonic_index(p3) - harmonic_index(p2) == pendant_delta_bound(1));

  const Graph k13 = add_pendant(p3, 1);
  CHECK(k13 == Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK(harmonic_index(k13) - harmonic_index(p3) == pendant_delta_bound(2));

  // A 2d/((d+1)(d+2)) bound would demand 1/3 here.
  CHECK(harmonic_index(k13) - harmonic_index(p3) < Rational(2 * 2, 3 * 4));

  CHECK_THROWS_AS(add_pendant(p2, 2), GraphError);
}

TEST_CASE("pendant examples") {
  // Interior vertex of P_4 next to an end.
  const Graph p4 = Graph::path(4);
  CHECK(harmonic_index(add_pendant(p4, 1)) - harmonic_index(p4) == Rational(7, 30));
  // Centre of P_5.
  const Graph p5 = Graph::path(5);
  CHECK(harmonic_index(add_pendant(p5, 2)) - harmonic_index(p5) == Rational(3, 10));
}

TEST_CASE("harmonic_edge_delta examples") {
  CHECK(harmonic_edge_delta(Graph::path(4), {1, 2}) == -Rational(1, 6));
  CHECK(harmonic_edge_delta(Graph::cycle(3), {0, 1}) == Rational(1, 6));
  CHECK_THROWS_AS(harmonic_edge_delta(Graph::path(4), {0, 2}), GraphError);
}

TEST_CASE("edge addition fixtures") {
  const std::vector<AddEdgeFixture> fixtures = {
      {path_plus(6, 5, {}), {2, 5}, Rational(3, 10)},
      {path_plus(7, 6, {{2, 6}}), {2, 6}, Rational(3, 10)},
      {path_plus(5, 4, {}), {1, 4}, Rational(7, 30)},
      {path_plus(8, 6, {{2, 6}, {3, 7}}), {1, 4}, -Rational(2, 15)},
      {path_plus(9, 7, {{2, 7}, {3, 8}}), {1, 4}, -Rational(1, 15)},
      {path_plus(10, 8, {{3, 8}, {4, 9}}), {2, 5}, Rational(0)},
      {path_plus(7, 5, {{2, 5}}), {5, 6}, Rational(17, 30)},
      {path_plus(8, 5, {{2, 5}, {5, 6}}), {6, 7}, Rational(1, 2)},
      {path_plus(9, 5, {{2, 5}, {5, 6}, {6, 7}, {7, 8}}), {8, 6}, Rational(1, 30)},
      {path_plus(5, 3, {{1, 3}, {3, 4}}), {4, 1}, -Rational(1, 10)},
      {path_plus(4, 3, {{2, 3}}), {3, 1}, -Rational(1, 30)},
  };
  for (const auto& f : fixtures) {
    Graph base = f.base;
    if (base.has_edge(f.added.u, f.added.v)) base = base.without_edge(f.added);
    const Graph after = base.with_edge(f.added);
    CAPTURE(to_string(after));
    CHECK(harmonic_edge_delta(after, f.added) == f.delta);
    CHECK(oracle::harmonic(after) - oracle::harmonic(base) == f.delta);
  }
}

TEST_CASE("incremental edge delta matches recomputation") {
  for (std::size_t n = 2; n <= 6; ++n) {
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) {
      for (const Edge& e : g.edges()) {
        REQUIRE(harmonic_edge_delta(g, e) ==
                oracle::harmonic(g) - oracle::harmonic(g.without_edge(e)));
      }
    });
  }
}

TEST_CASE("bridges") {
  CHECK(bridges(Graph::path(4)) == path_edges(4));
  CHECK(bridges(Graph::cycle(5)).empty());
  const Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK(bridges(paw) == std::vector<Edge>{{0, 3}});
  CHECK(cycle_edges(paw) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("bridges agree with the connectivity oracle") {
  for (std::size_t n = 2; n <= 6; ++n) {
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) {
      const auto b = bridges(g);
      for (const Edge& e : g.edges()) {
        const bool listed = std::binary_search(b.begin(), b.end(), e);
        REQUIRE(listed == oracle::is_bridge(g, e));
      }
    });
  }
}

TEST_CASE("find_cycle_edge") {
  CHECK_FALSE(find_cycle_edge(Graph::star(4)).has_value());
  CHECK(find_cycle_edge(Graph::cycle(4)) == Edge{0, 1});
  const Graph paw = Graph::from_edges(4, {{0, 3}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(find_cycle_edge(paw) == Edge{1, 2});
  CHECK_THROWS_AS(find_cycle_edge(Graph::from_edges(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("unicyclic_reduction") {
  const Graph k4 = Graph::complete(4);
  const auto steps = unicyclic_reduction_steps(k4);
  REQUIRE(steps.size() == 2);
  Graph current = k4;
  for (const auto& step : steps) {
    CHECK(step.deletion.graph_before == current);
    CHECK(step.result == current.without_edge(step.deletion.edge));
    CHECK(is_connected(step.result));
    CHECK(step.deletion.delta ==
          harmonic_index(step.deletion.graph_before) - harmonic_index(step.result));
    CHECK(step.deletion.delta >= -Rational(31, 105));
    current = step.result;
  }
  CHECK(cyclomatic_number(current) == 1);
  CHECK(unicyclic_reduction(k4).back() == current);

  CHECK_THROWS_AS(unicyclic_reduction_steps(Graph::cycle(5)), GraphError);
  CHECK_THROWS_AS(unicyclic_reduction_steps(Graph::path(5)), GraphError);
}

TEST_CASE("reduction ends unicyclic for every small graph") {
  for (std::size_t n = 4; n <= 6; ++n) {
    visit_connected_graphs({Family::kConnectedGraphs, n}, [&](const Graph& g) {
      const std::size_t k = cyclomatic_number(g);
      if (k < 2) return;
      const auto steps = unicyclic_reduction_steps(g);
      REQUIRE(steps.size() == k - 1);
      REQUIRE(cyclomatic_number(steps.back().result) == 1);
    });
  }
}
