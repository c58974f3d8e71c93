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

#include "hradius/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hradius/indices.hpp"

namespace hradius {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

// 4/x - 8/(x+1) + 2/(x+2): the single-endpoint part of f.
Rational endpoint_part(std::size_t x) {
  const auto xi = static_cast<std::int64_t>(x);
  return Rational(4, xi) - Rational(8, xi + 1) + Rational(2, xi + 2);
}

Rational lemma2_f_unchecked(const Rational& part_x, const Rational& part_y,
                            std::size_t x, std::size_t y) {
  return part_x + part_y + Rational(2, static_cast<std::int64_t>(x + y));
}

}  // namespace

Rational lemma2_f(std::size_t x, std::size_t y) {
  if (x < 2 || y < 2) {
    throw GraphError("lemma2_f is defined for integers x, y >= 2");
  }
  return lemma2_f_unchecked(endpoint_part(x), endpoint_part(y), x, y);
}

std::vector<Lemma2Point> lemma2_reference_points() {
  struct Entry {
    std::size_t x, y;
    std::int64_t num, den;
  };
  static constexpr Entry kTable[] = {
      {2, 2, 1, 6},     {2, 3, -1, 30},   {2, 4, -1, 10}, {2, 5, -9, 70},
      {3, 3, -1, 5},    {3, 4, -26, 105}, {3, 5, -37, 140}, {4, 4, -17, 60},
      {4, 5, -92, 315}, {5, 5, -31, 105},
  };
  std::vector<Lemma2Point> out;
  for (const Entry& e : kTable) {
    out.push_back({e.x, e.y, Rational(e.num, e.den), lemma2_f(e.x, e.y)});
  }
  return out;
}

Lemma2Result lemma2_minimize(std::size_t x_max, std::size_t y_max) {
  if (x_max < 5 || y_max < 5) {
    throw GraphError("lemma2_minimize needs x_max, y_max >= 5 to cover the minimizer");
  }
  std::vector<Rational> parts(std::max(x_max, y_max) + 1);
  for (std::size_t v = 2; v < parts.size(); ++v) parts[v] = endpoint_part(v);

  Lemma2Result result;
  result.x_max = x_max;
  result.y_max = y_max;
  result.monotone_tail = true;

  bool have_min = false;
  std::vector<Rational> previous_row;  // f(., y - 1)
  std::vector<Rational> row(x_max + 1);
  for (std::size_t y = 2; y <= y_max; ++y) {
    for (std::size_t x = 2; x <= x_max; ++x) {
      row[x] = lemma2_f_unchecked(parts[x], parts[y], x, y);
      // Row-major scan visits (x, y) in y-major order; keep the smallest
      // (x, y) pair lexicographically among ties.
      const bool better =
          !have_min || row[x] < result.min_value ||
          (row[x] == result.min_value && std::pair(x, y) < result.argmin);
      if (better) {
        result.min_value = row[x];
        result.argmin = {x, y};
        have_min = true;
      }
      if (y >= 5 && x >= 6) {
        ++result.tail_comparisons;
        if (!(row[x] > row[x - 1])) result.monotone_tail = false;
      }
      if (x >= 5 && y >= 6) {
        ++result.tail_comparisons;
        if (!(row[x] > previous_row[x])) result.monotone_tail = false;
      }
    }
    previous_row = row;
  }

  result.reference_points = lemma2_reference_points();
  result.reference_points_match =
      std::all_of(result.reference_points.begin(), result.reference_points.end(),
                  [](const Lemma2Point& p) { return p.matches(); });
  return result;
}

// ---------------------------------------------------------------------------

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::kTheorem1: return "theorem1";
    case Claim::kTheorem2: return "theorem2";
    case Claim::kTheorem3: return "theorem3";
    case Claim::kConjecture1: return "conjecture1";
    case Claim::kConjecture2: return "conjecture2";
    case Claim::kConjecture3: return "conjecture3";
    case Claim::kRgeH: return "rgeh";
  }
  return "?";
}

Claim claim_from_string(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Claim c : kAllClaims) {
    if (to_string(c) == lower) return c;
  }
  throw GraphError("unknown claim '" + name + "'");
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kHolds: return "holds";
    case Status::kHoldsWithEquality: return "holds_with_equality";
    case Status::kExempt: return "exempt";
    case Status::kViolated: return "violated";
  }
  return "?";
}

Status status_from_string(const std::string& name) {
  for (Status s : {Status::kHolds, Status::kHoldsWithEquality, Status::kExempt,
                   Status::kViolated}) {
    if (to_string(s) == name) return s;
  }
  throw GraphError("unknown status '" + name + "'");
}

bool is_exact_claim(Claim claim) {
  return claim == Claim::kTheorem1 || claim == Claim::kTheorem2 ||
         claim == Claim::kTheorem3 || claim == Claim::kConjecture3;
}

bool claim_applies(Claim claim, const GraphClass& cls) {
  switch (claim) {
    case Claim::kTheorem1: return cls.is_tree();
    case Claim::kTheorem2: return cls.is_unicyclic();
    case Claim::kTheorem3: return cls.cyclomatic >= 1;
    default: return true;
  }
}

Rational exact_threshold(Claim claim, std::size_t radius, std::size_t cyclomatic) {
  const Rational r = as_rational(radius);
  switch (claim) {
    case Claim::kTheorem1: return r + Rational(1, 15);
    case Claim::kTheorem2: return r;
    case Claim::kTheorem3:
      if (cyclomatic == 0) throw GraphError("theorem3 needs cyclomatic number >= 1");
      return r - Rational(31, 105) * as_rational(cyclomatic - 1);
    case Claim::kConjecture3: return r;
    default: break;
  }
  throw GraphError("claim " + to_string(claim) + " has no exact threshold");
}

double randic_threshold(Claim claim, std::size_t radius) {
  const auto r = static_cast<double>(radius);
  switch (claim) {
    case Claim::kConjecture1: return r - 1.0;
    case Claim::kConjecture2: return r;
    default: break;
  }
  throw GraphError("claim " + to_string(claim) + " has no radius threshold");
}

Status decide_exact_status(Claim claim, int slack_sign, const GraphClass& cls,
                           bool closed_form_ok) {
  const bool even_path = cls.kind == GraphKind::kEvenPath;
  auto non_strict = [slack_sign] {
    if (slack_sign < 0) return Status::kViolated;
    return slack_sign == 0 ? Status::kHoldsWithEquality : Status::kHolds;
  };
  switch (claim) {
    case Claim::kTheorem1:
      if (even_path) return closed_form_ok ? Status::kExempt : Status::kViolated;
      return slack_sign > 0 ? Status::kHolds : Status::kViolated;
    case Claim::kTheorem2:
      if (cls.kind == GraphKind::kEvenCycle) {
        return slack_sign == 0 ? Status::kHoldsWithEquality : Status::kViolated;
      }
      return slack_sign > 0 ? Status::kHolds : Status::kViolated;
    case Claim::kTheorem3:
      return non_strict();
    case Claim::kConjecture3:
      if (even_path) return Status::kExempt;
      return non_strict();
    default: break;
  }
  throw GraphError("claim " + to_string(claim) + " is not exact");
}

Status decide_randic_status(Claim claim, double slack, const GraphClass& cls) {
  switch (claim) {
    case Claim::kConjecture1:
      return slack < -kRandicTolerance ? Status::kViolated : Status::kHolds;
    case Claim::kConjecture2:
      if (cls.kind == GraphKind::kEvenPath) return Status::kExempt;
      return slack < -kRandicTolerance ? Status::kViolated : Status::kHolds;
    case Claim::kRgeH:
      return slack < -kIndexTolerance ? Status::kViolated : Status::kHolds;
    default: break;
  }
  throw GraphError("claim " + to_string(claim) + " is exact");
}

std::string to_string(const BoundValue& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return q->str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value);
  return os.str();
}

GraphInvariants compute_invariants(const Graph& g) {
  const DistanceProfile profile = distance_profile(g);
  GraphInvariants inv;
  inv.order = g.order();
  inv.harmonic = harmonic_index(g);
  inv.harmonic_float = harmonic_index_double(g);
  inv.randic = randic_index(g);
  inv.radius = profile.radius;
  inv.graph_class = classify(g);
  inv.cyclomatic = inv.graph_class.cyclomatic;
  return inv;
}

BoundCheckResult evaluate_claim(Claim claim, const GraphInvariants& inv) {
  if (!claim_applies(claim, inv.graph_class)) {
    throw GraphError(to_string(claim) + " does not apply to a graph of class " +
                     to_string(inv.graph_class.kind) + " (k=" +
                     std::to_string(inv.graph_class.cyclomatic) + ")");
  }
  BoundCheckResult result;
  result.claim = claim;
  if (is_exact_claim(claim)) {
    Rational bound = exact_threshold(claim, inv.radius, inv.cyclomatic);
    Rational slack = inv.harmonic - bound;
    bool closed_form_ok = true;
    if (inv.graph_class.kind == GraphKind::kEvenPath && inv.order >= 3) {
      closed_form_ok = inv.harmonic == as_rational(inv.radius) - Rational(1, 6);
      if (claim == Claim::kTheorem1) {
        result.note = closed_form_ok ? "even path: H = r - 1/6"
                                     : "even path violates H = r - 1/6";
      }
    }
    result.status = decide_exact_status(claim, slack.sign(), inv.graph_class, closed_form_ok);
    if (claim == Claim::kTheorem2 && result.status == Status::kViolated &&
        slack.sign() >= 0) {
      result.note = "equality case does not match the even-cycle characterization";
    }
    result.bound = std::move(bound);
    result.actual = inv.harmonic;
    result.slack = std::move(slack);
  } else {
    const double bound =
        claim == Claim::kRgeH ? inv.harmonic_float : randic_threshold(claim, inv.radius);
    const double slack = inv.randic - bound;
    result.status = decide_randic_status(claim, slack, inv.graph_class);
    result.bound = bound;
    result.actual = inv.randic;
    result.slack = slack;
  }
  return result;
}

namespace {

BoundCheckResult check_in_domain(Claim claim, const Graph& g, const char* domain) {
  const GraphInvariants inv = compute_invariants(g);
  if (!claim_applies(claim, inv.graph_class)) {
    throw GraphError(to_string(claim) + " requires " + domain);
  }
  return evaluate_claim(claim, inv);
}

}  // namespace

BoundCheckResult check_tree_bound(const Graph& g) {
  return check_in_domain(Claim::kTheorem1, g, "a tree");
}

BoundCheckResult check_unicyclic_bound(const Graph& g) {
  return check_in_domain(Claim::kTheorem2, g, "cyclomatic number 1");
}

BoundCheckResult check_cyclomatic_bound(const Graph& g) {
  return check_in_domain(Claim::kTheorem3, g, "cyclomatic number >= 1");
}

BoundCheckResult check_randic_vs_harmonic(const Graph& g) {
  return check_in_domain(Claim::kRgeH, g, "a connected graph");
}

std::vector<BoundCheckResult> check_conjectures(const Graph& g) {
  const GraphInvariants inv = compute_invariants(g);
  return {evaluate_claim(Claim::kConjecture1, inv), evaluate_claim(Claim::kConjecture2, inv),
          evaluate_claim(Claim::kConjecture3, inv)};
}

BoundCheckResult check_claim(Claim claim, const Graph& g) {
  return evaluate_claim(claim, compute_invariants(g));
}

}  // namespace hradius
