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

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "hradius/enumerate.hpp"
#include "small_graph.hpp"

namespace hradius {

namespace {

using detail::kPairs;
using detail::pair_bit;

EdgeMask relabeled_mask(EdgeMask mask, const std::array<std::uint8_t, 16>& position) {
  EdgeMask out = 0;
  while (mask != 0) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    out |= EdgeMask{1} << pair_bit(position[kPairs.lo[bit]], position[kPairs.hi[bit]]);
  }
  return out;
}

// Calls visit(mask') for every vertex order that lists degrees in
// non-increasing order; stops early when visit returns false.
template <typename Visit>
void for_each_degree_order(std::size_t n, EdgeMask mask, Visit&& visit) {
  const detail::SmallGraph g = detail::SmallGraph::from_mask(n, mask);
  std::array<std::uint8_t, 16> order{};
  std::iota(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::stable_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                   [&](std::uint8_t a, std::uint8_t b) { return g.degree(a) > g.degree(b); });

  // Blocks of equal degree, as [begin, end) ranges into `order`.
  std::array<std::pair<std::size_t, std::size_t>, 16> blocks{};
  std::size_t block_count = 0;
  for (std::size_t p = 0; p < n;) {
    std::size_t q = p;
    while (q < n && g.degree(order[q]) == g.degree(order[p])) ++q;
    blocks[block_count++] = {p, q};
    p = q;
  }

  std::array<std::uint8_t, 16> position{};
  while (true) {
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = static_cast<std::uint8_t>(p);
    if (!visit(relabeled_mask(mask, position))) return;
    std::size_t b = block_count;
    while (b > 0) {
      --b;
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
      if (b == 0) return;
    }
    if (block_count == 0) return;
  }
}

}  // namespace

EdgeMask canonical_mask(std::size_t n, EdgeMask mask) {
  EdgeMask best = ~EdgeMask{0};
  for_each_degree_order(n, mask, [&](EdgeMask candidate) {
    best = std::min(best, candidate);
    return true;
  });
  return best;
}

namespace detail {

// True iff `mask` is its own canonical form.
bool is_canonical(std::size_t n, EdgeMask mask) {
  const SmallGraph g = SmallGraph::from_mask(n, mask);
  for (std::size_t v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(v - 1)) return false;
  }
  bool canonical = true;
  for_each_degree_order(n, mask, [&](EdgeMask candidate) {
    if (candidate < mask) canonical = false;
    return canonical;
  });
  return canonical;
}

}  // namespace detail

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw GraphError("canonical_form supports at most " +
                     std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  return graph_from_mask(g.order(), canonical_mask(g.order(), edge_mask(g)));
}

}  // namespace hradius
