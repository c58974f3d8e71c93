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

#include "hradius/transforms.hpp"

#include <algorithm>
#include <string>

namespace hradius {

Graph add_pendant(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw GraphError("pendant anchor " + std::to_string(v) + " out of range");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(v, static_cast<Vertex>(g.order()));
  return Graph::from_edges(g.order() + 1, edges);
}

Rational pendant_delta_bound(std::size_t d) {
  if (d == 0) throw GraphError("pendant delta bound needs an anchor of degree >= 1");
  const auto di = static_cast<std::int64_t>(d);
  return Rational(2, (di + 1) * (di + 2));
}

Rational harmonic_edge_delta(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not in the graph");
  }
  const auto du = static_cast<std::int64_t>(g.degree(e.u));
  const auto dv = static_cast<std::int64_t>(g.degree(e.v));
  Rational delta(2, du + dv);
  // Terms on the other edges at each endpoint lose one unit of degree sum.
  auto endpoint_terms = [&](Vertex x, Vertex other, std::int64_t dx) {
    for (Vertex w : g.neighbors(x)) {
      if (w == other) continue;
      const auto dw = static_cast<std::int64_t>(g.degree(w));
      delta += Rational(2, dx + dw) - Rational(2, dx + dw - 1);
    }
  };
  endpoint_terms(e.u, e.v, du);
  endpoint_terms(e.v, e.u, dv);
  return delta;
}

std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = 0;
  std::vector<std::size_t> discovery(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<Edge> out;
  std::size_t timer = 0;

  struct Frame {
    Vertex vertex;
    Vertex parent;
    std::size_t next_neighbor;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (discovery[root] != kUnvisited) continue;
    discovery[root] = low[root] = ++timer;
    stack.push_back({root, root, 0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto nbrs = g.neighbors(frame.vertex);
      if (frame.next_neighbor < nbrs.size()) {
        const Vertex w = nbrs[frame.next_neighbor++];
        // Simple graph: the tree edge back to the parent is the only one to skip.
        if (w == frame.parent && frame.vertex != root) continue;
        if (discovery[w] == kUnvisited) {
          discovery[w] = low[w] = ++timer;
          stack.push_back({w, frame.vertex, 0});
        } else {
          low[frame.vertex] = std::min(low[frame.vertex], discovery[w]);
        }
        continue;
      }
      const Vertex child = frame.vertex;
      const Vertex parent = frame.parent;
      stack.pop_back();
      if (!stack.empty()) {
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] > discovery[parent]) out.emplace_back(parent, child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> cycle_edges(const Graph& g) {
  const std::vector<Edge> cut = bridges(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(cut.begin(), cut.end(), e)) out.push_back(e);
  }
  return out;
}

std::optional<Edge> find_cycle_edge(const Graph& g) {
  if (!is_connected(g)) throw GraphError("find_cycle_edge requires a connected graph");
  const std::vector<Edge> candidates = cycle_edges(g);
  if (candidates.empty()) return std::nullopt;
  return candidates.front();
}

std::vector<ReductionStep> unicyclic_reduction_steps(const Graph& g) {
  const std::size_t k = cyclomatic_number(g);
  if (k < 2) {
    throw GraphError("unicyclic reduction needs cyclomatic number >= 2, got " +
                     std::to_string(k));
  }
  std::vector<ReductionStep> steps;
  steps.reserve(k - 1);
  Graph current = g;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Edge e = *find_cycle_edge(current);
    Rational delta = harmonic_edge_delta(current, e);
    Graph next = current.without_edge(e);
    steps.push_back({EdgeDelta{std::move(current), e, std::move(delta)}, next});
    current = std::move(next);
  }
  return steps;
}

std::vector<Graph> unicyclic_reduction(const Graph& g) {
  std::vector<Graph> out;
  for (ReductionStep& step : unicyclic_reduction_steps(g)) {
    out.push_back(std::move(step.result));
  }
  return out;
}

}  // namespace hradius
