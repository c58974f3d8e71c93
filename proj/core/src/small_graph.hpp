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

// Bitset graphs for the enumeration hot loops. Not installed.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "hradius/enumerate.hpp"

namespace hradius::detail {

using Row = std::uint16_t;

struct PairTable {
  std::array<std::uint8_t, 64> lo{};
  std::array<std::uint8_t, 64> hi{};
  constexpr PairTable() {
    std::size_t bit = 0;
    for (std::uint8_t j = 1; j < 12 && bit < 64; ++j) {
      for (std::uint8_t i = 0; i < j && bit < 64; ++i, ++bit) {
        lo[bit] = i;
        hi[bit] = j;
      }
    }
  }
};

inline constexpr PairTable kPairs{};

constexpr std::size_t pair_bit(std::size_t i, std::size_t j) {
  return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct SmallGraph {
  std::size_t n = 0;
  std::array<Row, 16> rows{};

  Row all() const { return static_cast<Row>((1u << n) - 1); }
  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(rows[v]));
  }

  static SmallGraph from_mask(std::size_t n, EdgeMask mask) {
    SmallGraph g;
    g.n = n;
    while (mask != 0) {
      const int bit = std::countr_zero(mask);
      mask &= mask - 1;
      const auto i = kPairs.lo[static_cast<std::size_t>(bit)];
      const auto j = kPairs.hi[static_cast<std::size_t>(bit)];
      g.rows[i] |= static_cast<Row>(1u << j);
      g.rows[j] |= static_cast<Row>(1u << i);
    }
    return g;
  }

  bool connected() const {
    if (n <= 1) return true;
    Row seen = 1;
    Row frontier = 1;
    const Row target = all();
    while (frontier != 0) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= static_cast<Row>(f - 1)) {
        next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = static_cast<Row>(next & ~seen);
      seen |= next;
      if (seen == target) return true;
    }
    return seen == target;
  }

  /// Eccentricity of v, abandoning the search once it exceeds `cutoff`.
  std::size_t eccentricity(std::size_t v, std::size_t cutoff) const {
    const Row target = all();
    Row seen = static_cast<Row>(1u << v);
    Row frontier = seen;
    std::size_t ecc = 0;
    while (seen != target) {
      if (ecc >= cutoff) return cutoff + 1;
      Row next = 0;
      for (Row f = frontier; f != 0; f &= static_cast<Row>(f - 1)) {
        next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = static_cast<Row>(next & ~seen);
      seen |= next;
      ++ecc;
    }
    return ecc;
  }

  /// Radius of a connected graph.
  std::size_t radius() const {
    std::size_t best = n;  // eccentricities are <= n - 1
    for (std::size_t v = 0; v < n && best > 0; ++v) {
      const std::size_t e = eccentricity(v, best);
      if (e < best) best = e;
    }
    return n == 1 ? 0 : best;
  }
};

/// Decodes Pruefer digits into an edge mask. `digits` has n - 2 entries.
inline EdgeMask pruefer_to_mask(std::size_t n, const std::uint8_t* digits) {
  if (n == 1) return 0;
  if (n == 2) return 1;
  std::array<std::uint8_t, 16> degree{};
  for (std::size_t v = 0; v < n; ++v) degree[v] = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) ++degree[digits[i]];
  EdgeMask mask = 0;
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const std::size_t v = digits[i];
    mask |= EdgeMask{1} << pair_bit(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Remaining two vertices: `leaf` and n - 1.
  mask |= EdgeMask{1} << pair_bit(leaf, n - 1);
  return mask;
}

/// True iff `mask` equals canonical_mask(n, mask).
bool is_canonical(std::size_t n, EdgeMask mask);

}  // namespace hradius::detail
