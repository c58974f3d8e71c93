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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hradius/bounds.hpp"
#include "hradius/graph.hpp"
#include "hradius/rational.hpp"

namespace hradius {

enum class Family { kConnectedGraphs, kLabeledTrees, kUnicyclicGraphs };

std::string to_string(Family family);
/// Accepts "connected", "trees", "unicyclic" and the enum spellings.
Family family_from_string(const std::string& name);

/// Largest n enumerated without an explicit override.
std::size_t family_cap(Family family);

/// Hard limit of the bitmask representation (C(n,2) <= 64 edge bits).
inline constexpr std::size_t kMaxEnumerationOrder = 11;

struct FamilySpec {
  Family family = Family::kConnectedGraphs;
  std::size_t n = 1;
  bool dedup = false;
  bool override_cap = false;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws GraphError if n is outside the family's range.
void validate(const FamilySpec& spec);

/// Edge set as a bitmask; edge (i, j), i < j, is bit j(j-1)/2 + i.
using EdgeMask = std::uint64_t;

EdgeMask edge_mask(const Graph& g);
Graph graph_from_mask(std::size_t n, EdgeMask mask);

/// Relabeling-invariant canonical mask: the minimal edge bitmask over all
/// vertex orders that list degrees in non-increasing order.
EdgeMask canonical_mask(std::size_t n, EdgeMask mask);
Graph canonical_form(const Graph& g);

using GraphVisitor = std::function<void(const Graph&)>;

/// Every labeled connected graph on n vertices (or one per isomorphism
/// class with dedup), in increasing bitmask order.
void visit_connected_graphs(const FamilySpec& spec, const GraphVisitor& visit);
/// All n^(n-2) labeled trees in Pruefer-sequence order.
void visit_labeled_trees(const FamilySpec& spec, const GraphVisitor& visit);
/// Every labeled connected graph with m = n.
void visit_unicyclic_graphs(const FamilySpec& spec, const GraphVisitor& visit);

/// Dispatches on spec.family.
void visit_family(const FamilySpec& spec, const GraphVisitor& visit);

std::vector<Graph> connected_graphs(const FamilySpec& spec);
std::vector<Graph> labeled_trees(const FamilySpec& spec);
std::vector<Graph> unicyclic_graphs(const FamilySpec& spec);

/// Decodes a Pruefer sequence over labels 0..n-1 (length n - 2).
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

// ---------------------------------------------------------------------------
// Sweeps

struct ClaimTally {
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t exempt = 0;
  std::uint64_t violated = 0;
  /// Graphs outside the claim's domain (e.g. non-trees for theorem1).
  std::uint64_t skipped = 0;

  friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

/// Minimum-slack witness; ties go to the smaller edge bitmask.
struct Extremal {
  std::size_t n = 0;
  EdgeMask mask = 0;
  std::vector<Edge> edges;
  BoundValue slack;

  friend bool operator==(const Extremal&, const Extremal&) = default;
};

struct ClaimSummary {
  Claim claim = Claim::kTheorem1;
  ClaimTally tally;
  std::optional<Extremal> extremal;

  friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

/// A violation that can be replayed from its edge list alone.
struct Certificate {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::string graph6;
  BoundCheckResult result;
  /// High-precision R(G) for Randic-side claims, empty otherwise.
  std::string randic_precise;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct SweepReport {
  FamilySpec spec;
  std::vector<Claim> claims;
  std::uint64_t graphs_examined = 0;
  std::vector<ClaimSummary> summaries;
  std::uint64_t violations_total = 0;
  /// First violations in enumeration order, at most SweepOptions::max_certificates.
  std::vector<Certificate> violations;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct SweepOptions {
  std::size_t jobs = 1;
  std::size_t max_certificates = 100;
};

/// Throws GraphError when a claim cannot apply to any member of the family.
void check_claims_applicable(Family family, std::span<const Claim> claims);

/// Applies every claim to every graph of the family. The report depends only
/// on (spec, claims, max_certificates), never on the worker count.
SweepReport sweep(const FamilySpec& spec, std::span<const Claim> claims,
                  const SweepOptions& options = {});

/// Rebuilds the certificate's graph, re-runs the public checker, and
/// compares status and values exactly.
bool replay(const Certificate& certificate);

}  // namespace hradius
