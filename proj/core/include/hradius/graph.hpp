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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hradius {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed graph input and for operations applied outside
/// their domain (for example the radius of a disconnected graph).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the vertices 0..n-1.
///
/// Neighbor lists are kept sorted so that iteration order (and therefore
/// every floating point sum over edges) is deterministic. Values are
/// immutable once built; the surgery helpers return new graphs.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws GraphError on a self-loop,
  /// a repeated edge, or an endpoint outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph empty(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph star(std::size_t leaves);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

std::string to_string(const Graph& g);

// ---------------------------------------------------------------------------
// Structural invariants

bool is_connected(const Graph& g);

struct DistanceProfile {
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  std::size_t diameter = 0;
};

/// All-sources BFS. Throws GraphError on a disconnected (or empty) graph.
DistanceProfile distance_profile(const Graph& g);

std::size_t radius(const Graph& g);

/// m - n + 1. Throws GraphError on a disconnected graph.
std::size_t cyclomatic_number(const Graph& g);

enum class GraphKind {
  kTree,
  kEvenPath,
  kOddPath,
  kEvenCycle,
  kOddCycle,
  kUnicyclic,
  kGeneral,
};

struct GraphClass {
  GraphKind kind = GraphKind::kTree;
  std::size_t cyclomatic = 0;

  bool is_tree() const {
    return kind == GraphKind::kTree || kind == GraphKind::kEvenPath ||
           kind == GraphKind::kOddPath;
  }
  bool is_unicyclic() const {
    return kind == GraphKind::kUnicyclic || kind == GraphKind::kEvenCycle ||
           kind == GraphKind::kOddCycle;
  }

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

/// Most specific class of a connected graph.
GraphClass classify(const Graph& g);

/// Classification from degree data alone; requires a connected graph with
/// the given cyclomatic number and max degree.
GraphClass classify_connected(std::size_t n, std::size_t cyclomatic,
                              std::size_t max_degree, std::size_t min_degree);

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

}  // namespace hradius
