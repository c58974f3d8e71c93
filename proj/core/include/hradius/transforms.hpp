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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hradius/graph.hpp"
#include "hradius/rational.hpp"

namespace hradius {

/// Appends vertex n joined only to `v`. Throws GraphError if v >= n.
Graph add_pendant(const Graph& g, Vertex v);

/// Lower bound on H(g + pendant at v) - H(g) when deg(v) = d >= 1:
/// 2/((d+1)(d+2)).
///
/// The worst case puts every old neighbor of v at degree 1, so each of the
/// d existing terms drops by 2/(d+1) - 2/(d+2) while the new pendant edge
/// contributes 2/(d+2). The bound is attained by P_2 -> P_3 (d = 1) and
/// P_3 -> K_{1,3} (d = 2). The sharper 2d/((d+1)(d+2)) sometimes quoted for
/// this step does not hold: it exceeds the actual delta 1/6 at d = 2.
Rational pendant_delta_bound(std::size_t d);

/// H(g) - H(g - e), computed from the terms at e's endpoints only.
/// Throws GraphError if e is not an edge of g.
Rational harmonic_edge_delta(const Graph& g, Edge e);

/// One edge deletion with its exact Harmonic-index change.
struct EdgeDelta {
  Graph graph_before;
  Edge edge;
  Rational delta;  // H(graph_before) - H(graph_before - edge)
};

/// Bridges of g in lexicographic order. Works on disconnected graphs.
std::vector<Edge> bridges(const Graph& g);

/// Edges lying on some cycle, in lexicographic order.
std::vector<Edge> cycle_edges(const Graph& g);

/// Lexicographically smallest edge that lies on a cycle, or nullopt for a
/// tree. Throws GraphError on a disconnected graph.
std::optional<Edge> find_cycle_edge(const Graph& g);

struct ReductionStep {
  EdgeDelta deletion;
  Graph result;  // deletion.graph_before - deletion.edge
};

/// Deletes cycle edges one at a time until a spanning unicyclic subgraph
/// remains. For cyclomatic number k >= 2 the result has k - 1 entries;
/// step i leaves cyclomatic number k - 1 - i. Throws GraphError if k < 2.
std::vector<ReductionStep> unicyclic_reduction_steps(const Graph& g);

/// The graphs G_1, ..., G_{k-1} of the reduction.
std::vector<Graph> unicyclic_reduction(const Graph& g);

}  // namespace hradius
