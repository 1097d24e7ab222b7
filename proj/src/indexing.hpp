/*
 * This file is part of the kohmoto spectral toolkit.
 *
 * Copyright 2026 the kohmoto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "tree.hpp"

namespace kohmoto {

/// 2x2 integer matrix attached to a G-vertex v at level k:
///
///     ( Z_A(k)  z_A(v) )
///     ( Z_B(k)  z_B(v) )
///
/// The first column counts all A/B vertices of the level, the second column
/// counts those strictly to the left of v.
struct CountMatrix {
  Int128 level_a, prefix_a;
  Int128 level_b, prefix_b;

  Int128 det() const { return level_a * prefix_b - prefix_a * level_b; }

  friend bool operator==(const CountMatrix& x, const CountMatrix& y) {
    return x.level_a == y.level_a && x.prefix_a == y.prefix_a &&
           x.level_b == y.level_b && x.prefix_b == y.prefix_b;
  }
};

CountMatrix count_matrix(const SpectralTree& tree, int level, std::int64_t pos);

/// Integer index of a spectral gap. `raw` is (-1)^k det of the count matrix
/// and always lies in [0, q_k); `value` is its centered-modulo reduction into
/// [-q_k/2, q_k/2), the invariant that colors the butterfly.
struct GapIndex {
  int level = 0;
  std::int64_t position = 0;
  std::int64_t gap_number = 0;  // n = z_A + z_B
  Int128 q{1};
  Int128 raw{0};
  Int128 value{0};
};

GapIndex gap_index(const SpectralTree& tree, int level, std::int64_t pos);

/// Digit step matrix ( a-1  a ; 1  1 ). It maps the count columns of level k
/// to level k+1 and has determinant -1 for every digit, which is what makes
/// the gap index survive the level step.
struct CountStepMatrix {
  Int128 m00, m01, m10, m11;

  static CountStepMatrix for_digit(std::int64_t a) {
    return CountStepMatrix{Int128(a - 1), Int128(a), Int128(1), Int128(1)};
  }
  Int128 det() const { return m00 * m11 - m01 * m10; }
};

/// One instance of the count-matrix recursion: v is a G-vertex at level k,
/// u and w the G-neighbors immediately left and right of v's B-child at
/// level k+1. Both identities are exact integer statements:
///
///     Q(w) = Q(u) + (0 0; 0 1)
///     Q(w) = T_{k+1} Q(v) + (0 0; 0 k mod 2)
struct RecursionCheck {
  int level = 0;             // of v
  std::int64_t position = 0; // of v
  std::int64_t left_pos = 0, right_pos = 0;  // u, w at level k+1
  CountMatrix q_v, q_u, q_w;
  CountStepMatrix step;
  bool neighbor_identity = false;
  bool step_identity = false;

  bool pass() const { return neighbor_identity && step_identity; }
};

/// True when v's B-child has G-neighbors on both sides and level k+1 exists.
bool recursion_admissible(const SpectralTree& tree, int level, std::int64_t pos);

RecursionCheck verify_count_recursion(const SpectralTree& tree, int level, std::int64_t pos);

enum class PathSide { LeftMost, RightMost };

/// Boundary path from a G-vertex: the single B-child first, then repeatedly
/// the left-most or right-most child. Labels alternate G,B,G,B,... and the
/// gap index of every G along the way equals the origin's.
struct BoundaryPath {
  int origin_level = 0;
  std::int64_t origin_position = 0;
  PathSide side = PathSide::RightMost;
  std::vector<std::int64_t> positions;  // positions[i] lives at level origin_level + i

  int level_of(std::size_t i) const { return origin_level + static_cast<int>(i); }
};

/// Constructs the boundary path down to `to_level` (absolute). The side is
/// chosen from the parity of the level and the sign of the index: right-most
/// for (even, positive) and (odd, negative), left-most for the complementary
/// cases. A zero index (an unbounded gap) has no path and is refused.
BoundaryPath boundary_path(const SpectralTree& tree, int level, std::int64_t pos, int to_level);

/// Conservation report: the gap index at every even step of the path,
/// compared with the origin's value. Failures are recorded, never thrown.
struct ConservationCheck {
  struct Entry {
    GapIndex index;
    bool pass = false;
  };
  Int128 origin_value{0};
  std::vector<Entry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

ConservationCheck verify_conservation(const SpectralTree& tree, const BoundaryPath& path);

/// Modular inverse of p modulo q (q >= 1, gcd(p, q) = 1), in [0, q).
Int128 mod_inverse(Int128 p, Int128 q);

/// Closed-form gap index: the unique c in [-q/2, q/2) with c*p = n (mod q).
/// This is the rule that colors the butterfly without building a tree.
/// Requires 1 <= n <= q-1 and gcd(p, q) = 1.
Int128 solve_diophantine(Int128 n, Int128 p, Int128 q);

}  // namespace kohmoto
