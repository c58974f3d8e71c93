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
#include <string>

#include "hradius/graph.hpp"
#include "hradius/rational.hpp"

namespace hradius {

/// Sum over edges of 2/(d_u + d_v), exact. Defined on any graph; isolated
/// vertices and empty edge sets contribute 0.
Rational harmonic_index(const Graph& g);

/// H(g) accumulated in double, lexicographic edge order. This is the
/// Harmonic side of the floating R >= H comparison.
double harmonic_index_double(const Graph& g);

/// Sum over edges of 1/sqrt(d_u d_v), accumulated in lexicographic edge order.
double randic_index(const Graph& g);

/// Sign of R(g) - threshold evaluated with `bits` of binary precision.
/// Used to certify Randic-side violations found in double precision.
int randic_compare(const Graph& g, const Rational& threshold, unsigned bits = 256);

/// Decimal rendering of R(g) at `bits` binary precision.
std::string randic_index_decimal(const Graph& g, unsigned bits = 256, int digits = 40);

/// Closed form H(P_n) = n/2 - 1/6. Throws GraphError for n < 3.
Rational path_harmonic_closed_form(std::size_t n);

struct IndexReport {
  Rational harmonic;
  double randic = 0.0;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::size_t cyclomatic = 0;
  GraphClass graph_class;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

/// Full per-graph report. Requires a connected graph.
IndexReport index_report(const Graph& g);

}  // namespace hradius
