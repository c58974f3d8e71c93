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

#include "hradius/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace hradius {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError("vertex count too large");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an endpoint outside [0," +
                       std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw GraphError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::empty(std::size_t n) { return from_edges(n, {}); }

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return from_edges(n, edges);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return from_edges(n, edges);
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return from_edges(n, edges);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, static_cast<Vertex>(i));
  }
  return from_edges(leaves + 1, edges);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u >= order() || e.v >= order()) throw GraphError("edge endpoint out of range");
  if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
  if (has_edge(e.u, e.v)) throw GraphError("edge already present");
  Graph g = *this;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(g.adjacency_[e.u], e.v);
  insert_sorted(g.adjacency_[e.v], e.u);
  ++g.edge_count_;
  return g;
}

Graph Graph::without_edge(Edge e) const {
  if (!has_edge(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not in the graph");
  }
  Graph g = *this;
  auto erase = [](std::vector<Vertex>& list, Vertex x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  erase(g.adjacency_[e.u], e.v);
  erase(g.adjacency_[e.v], e.u);
  --g.edge_count_;
  return g;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(order(), false);
  for (Vertex p : perm) {
    if (p >= order() || seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(edge_count_);
  for (const Edge& e : edges()) relabeled.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(order(), relabeled);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ",") << "(" << e.u << "," << e.v << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Distances from `source`; unreachable vertices keep kUnreached.
void bfs(const Graph& g, Vertex source, std::vector<std::size_t>& dist,
         std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw GraphError(std::string(what) + " requires a connected graph");
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw GraphError("connectivity of the empty graph is undefined");
  std::vector<std::size_t> dist(g.order());
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  bfs(g, 0, dist, queue);
  return queue.size() == g.order();
}

DistanceProfile distance_profile(const Graph& g) {
  require_connected(g, "distance_profile");
  const std::size_t n = g.order();
  DistanceProfile profile;
  profile.eccentricity.resize(n);
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    bfs(g, v, dist, queue);
    // BFS order is non-decreasing in distance.
    profile.eccentricity[v] = dist[queue.back()];
  }
  profile.radius = *std::min_element(profile.eccentricity.begin(),
                                     profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(),
                                       profile.eccentricity.end());
  return profile;
}

std::size_t radius(const Graph& g) { return distance_profile(g).radius; }

std::size_t cyclomatic_number(const Graph& g) {
  require_connected(g, "cyclomatic_number");
  return g.size() + 1 - g.order();
}

GraphClass classify_connected(std::size_t n, std::size_t cyclomatic,
                              std::size_t max_degree, std::size_t min_degree) {
  GraphClass cls;
  cls.cyclomatic = cyclomatic;
  if (cyclomatic == 0) {
    if (max_degree <= 2) {
      cls.kind = n % 2 == 0 ? GraphKind::kEvenPath : GraphKind::kOddPath;
    } else {
      cls.kind = GraphKind::kTree;
    }
  } else if (cyclomatic == 1) {
    if (max_degree == 2 && min_degree == 2) {
      cls.kind = n % 2 == 0 ? GraphKind::kEvenCycle : GraphKind::kOddCycle;
    } else {
      cls.kind = GraphKind::kUnicyclic;
    }
  } else {
    cls.kind = GraphKind::kGeneral;
  }
  return cls;
}

GraphClass classify(const Graph& g) {
  const std::size_t k = cyclomatic_number(g);
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return classify_connected(g.order(), k, hi, lo);
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kTree: return "Tree";
    case GraphKind::kEvenPath: return "EvenPath";
    case GraphKind::kOddPath: return "OddPath";
    case GraphKind::kEvenCycle: return "EvenCycle";
    case GraphKind::kOddCycle: return "OddCycle";
    case GraphKind::kUnicyclic: return "Unicyclic";
    case GraphKind::kGeneral: return "General";
  }
  return "?";
}

GraphKind graph_kind_from_string(const std::string& name) {
  for (GraphKind k : {GraphKind::kTree, GraphKind::kEvenPath, GraphKind::kOddPath,
                      GraphKind::kEvenCycle, GraphKind::kOddCycle,
                      GraphKind::kUnicyclic, GraphKind::kGeneral}) {
    if (to_string(k) == name) return k;
  }
  throw GraphError("unknown graph class '" + name + "'");
}

}  // namespace hradius
