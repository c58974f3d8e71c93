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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hradius/graph.hpp"
#include "hradius/rational.hpp"

namespace hradius {

// ---------------------------------------------------------------------------
// Lemma 2 function

/// f(x,y) = 4/x - 8/(x+1) + 2/(x+2) + 4/y - 8/(y+1) + 2/(y+2) + 2/(x+y),
/// the lower bound on the Harmonic-index loss when a cycle edge with end
/// degrees x and y is deleted. Throws GraphError unless x, y >= 2.
Rational lemma2_f(std::size_t x, std::size_t y);

struct Lemma2Point {
  std::size_t x = 0;
  std::size_t y = 0;
  Rational expected;
  Rational actual;
  bool matches() const { return expected == actual; }

  friend bool operator==(const Lemma2Point&, const Lemma2Point&) = default;
};

/// The ten tabulated values of f on 2 <= x <= y <= 5.
std::vector<Lemma2Point> lemma2_reference_points();

struct Lemma2Result {
  std::size_t x_max = 0;
  std::size_t y_max = 0;
  std::pair<std::size_t, std::size_t> argmin;
  Rational min_value;
  /// f strictly increases along x and along y everywhere in [5,x_max]x[5,y_max].
  bool monotone_tail = false;
  std::size_t tail_comparisons = 0;
  std::vector<Lemma2Point> reference_points;
  bool reference_points_match = false;

  friend bool operator==(const Lemma2Result&, const Lemma2Result&) = default;
};

/// Exhaustive exact minimization over [2,x_max] x [2,y_max]. Ties resolve
/// to the lexicographically smallest (x, y). Throws GraphError if either
/// bound is below 5.
Lemma2Result lemma2_minimize(std::size_t x_max, std::size_t y_max);

// ---------------------------------------------------------------------------
// Claims

enum class Claim {
  kTheorem1,     // trees except even paths: H > r + 1/15
  kTheorem2,     // unicyclic: H >= r, equality iff even cycle
  kTheorem3,     // k >= 1: H >= r - (31/105)(k - 1)
  kConjecture1,  // connected: R >= r - 1
  kConjecture2,  // connected except even paths: R >= r
  kConjecture3,  // connected except even paths: H >= r
  kRgeH,         // R >= H
};

inline constexpr std::array<Claim, 7> kAllClaims = {
    Claim::kTheorem1,    Claim::kTheorem2,    Claim::kTheorem3, Claim::kConjecture1,
    Claim::kConjecture2, Claim::kConjecture3, Claim::kRgeH};

enum class Status { kHolds, kHoldsWithEquality, kExempt, kViolated };

std::string to_string(Claim claim);
Claim claim_from_string(const std::string& name);  // accepts "theorem1", "Theorem1", "rgeh", ...
std::string to_string(Status status);
Status status_from_string(const std::string& name);

/// Claims compared in exact arithmetic (the Harmonic side).
bool is_exact_claim(Claim claim);

/// Randic-side claims count as violated only below -kRandicTolerance.
inline constexpr double kRandicTolerance = 1e-9;
/// Tolerance for R >= H, both sides accumulated in double.
inline constexpr double kIndexTolerance = 1e-12;

/// Whether a connected graph of this class lies in the claim's domain.
bool claim_applies(Claim claim, const GraphClass& cls);

/// Exact right-hand side of an exact claim at radius r and cyclomatic k.
Rational exact_threshold(Claim claim, std::size_t radius, std::size_t cyclomatic);

/// Right-hand side of Conjecture 1 / 2.
double randic_threshold(Claim claim, std::size_t radius);

/// Verdict for an exact claim from the sign of H - threshold.
/// `closed_form_ok` reports whether an even path (n >= 3) satisfies
/// H = r - 1/6; it is ignored for every other class.
Status decide_exact_status(Claim claim, int slack_sign, const GraphClass& cls,
                           bool closed_form_ok);

/// Verdict for a floating claim from its slack.
Status decide_randic_status(Claim claim, double slack, const GraphClass& cls);

using BoundValue = std::variant<Rational, double>;

struct BoundCheckResult {
  Claim claim = Claim::kTheorem1;
  Status status = Status::kHolds;
  BoundValue bound;
  BoundValue actual;
  BoundValue slack;  // actual - bound
  std::string note;

  friend bool operator==(const BoundCheckResult&, const BoundCheckResult&) = default;
};

std::string to_string(const BoundValue& value);

/// Everything the claim checkers consume.
struct GraphInvariants {
  std::size_t order = 0;
  Rational harmonic;
  double harmonic_float = 0.0;  // see harmonic_index_double
  double randic = 0.0;
  std::size_t radius = 0;
  std::size_t cyclomatic = 0;
  GraphClass graph_class;
};

GraphInvariants compute_invariants(const Graph& g);

/// Evaluates a claim on precomputed invariants. Throws GraphError if the
/// graph is outside the claim's domain.
BoundCheckResult evaluate_claim(Claim claim, const GraphInvariants& inv);

BoundCheckResult check_tree_bound(const Graph& g);
BoundCheckResult check_unicyclic_bound(const Graph& g);
BoundCheckResult check_cyclomatic_bound(const Graph& g);
BoundCheckResult check_randic_vs_harmonic(const Graph& g);
/// Conjectures 1, 2, 3 in that order.
std::vector<BoundCheckResult> check_conjectures(const Graph& g);

BoundCheckResult check_claim(Claim claim, const Graph& g);

}  // namespace hradius
