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

#include "hradius/indices.hpp"

#include <cmath>
#include <map>

namespace hradius {

Rational harmonic_index(const Graph& g) {
  // Group edges by degree sum: H = sum_s count_s * 2 / s.
  std::map<std::size_t, std::int64_t> by_degree_sum;
  for (const Edge& e : g.edges()) {
    ++by_degree_sum[g.degree(e.u) + g.degree(e.v)];
  }
  Rational total;
  for (const auto& [sum, count] : by_degree_sum) {
    total += Rational(2 * count, static_cast<std::int64_t>(sum));
  }
  return total;
}

double harmonic_index_double(const Graph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += 2.0 / static_cast<double>(g.degree(e.u) + g.degree(e.v));
  }
  return total;
}

double randic_index(const Graph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) *
                             static_cast<double>(g.degree(e.v)));
  }
  return total;
}

namespace {

mpf_class randic_mpf(const Graph& g, unsigned bits) {
  mpf_class total(0, bits);
  mpf_class term(0, bits);
  for (const Edge& e : g.edges()) {
    term = static_cast<unsigned long>(g.degree(e.u) * g.degree(e.v));
    term = sqrt(term);
    total += 1 / term;
  }
  return total;
}

}  // namespace

int randic_compare(const Graph& g, const Rational& threshold, unsigned bits) {
  mpf_class r = randic_mpf(g, bits);
  mpf_class t(threshold.raw(), bits);
  return cmp(r, t);
}

std::string randic_index_decimal(const Graph& g, unsigned bits, int digits) {
  mpf_class r = randic_mpf(g, bits);
  mp_exp_t exponent = 0;
  std::string mantissa = r.get_str(exponent, 10, static_cast<std::size_t>(digits));
  if (mantissa.empty()) return "0";
  if (exponent <= 0) return "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mantissa;
  if (static_cast<std::size_t>(exponent) >= mantissa.size()) {
    return mantissa + std::string(static_cast<std::size_t>(exponent) - mantissa.size(), '0');
  }
  return mantissa.substr(0, static_cast<std::size_t>(exponent)) + "." +
         mantissa.substr(static_cast<std::size_t>(exponent));
}

Rational path_harmonic_closed_form(std::size_t n) {
  if (n < 3) throw GraphError("path closed form is stated for n >= 3");
  return Rational(static_cast<std::int64_t>(n), 2) - Rational(1, 6);
}

IndexReport index_report(const Graph& g) {
  const DistanceProfile profile = distance_profile(g);
  IndexReport report;
  report.harmonic = harmonic_index(g);
  report.randic = randic_index(g);
  report.radius = profile.radius;
  report.diameter = profile.diameter;
  report.graph_class = classify(g);
  report.cyclomatic = report.graph_class.cyclomatic;
  return report;
}

}  // namespace hradius
