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

#include "indexing.hpp"

#include <string>

namespace kohmoto {

namespace {

void require_g(const SpectralTree& tree, int level, std::int64_t pos) {
  if (tree.label(level, pos) != Label::G) {
    throw InvalidArgument("vertex (" + std::to_string(level) + ", " + std::to_string(pos) +
                          ") is not a G-vertex");
  }
}

Int128 sign_for_level(int level) { return level % 2 == 0 ? Int128(1) : Int128(-1); }

}  // namespace

CountMatrix count_matrix(const SpectralTree& tree, int level, std::int64_t pos) {
  require_g(tree, level, pos);
  const LevelCounts counts = tree.level_counts(level);
  const auto [z_a, z_b] = tree.prefix_counts(level, pos);
  return CountMatrix{Int128(counts.count_a), Int128(z_a), Int128(counts.count_b), Int128(z_b)};
}

GapIndex gap_index(const SpectralTree& tree, int level, std::int64_t pos) {
  const CountMatrix q = count_matrix(tree, level, pos);
  GapIndex out;
  out.level = level;
  out.position = pos;
  out.gap_number = tree.gap_number(level, pos);
  out.q = tree.convergent(level).q;
  out.raw = sign_for_level(level) * q.det();
  out.value = centered_mod(out.raw, out.q);
  return out;
}

bool recursion_admissible(const SpectralTree& tree, int level, std::int64_t pos) {
  if (tree.label(level, pos) != Label::G) return false;
  if (level >= tree.depth()) return false;
  const std::int64_t child = tree.first_child(level, pos);
  return child > 0 && child + 1 < tree.level(level + 1).size();
}

RecursionCheck verify_count_recursion(const SpectralTree& tree, int level, std::int64_t pos) {
  require_g(tree, level, pos);
  if (level >= tree.depth()) {
    throw InvalidArgument("recursion check needs level " + std::to_string(level + 1) +
                          " to be built");
  }
  const std::int64_t child = tree.first_child(level, pos);
  if (child == 0 || child + 1 >= tree.level(level + 1).size()) {
    throw InvalidArgument("B-child at a level boundary has no G-neighbors on both sides");
  }

  RecursionCheck check;
  check.level = level;
  check.position = pos;
  check.left_pos = child - 1;
  check.right_pos = child + 1;
  check.q_v = count_matrix(tree, level, pos);
  check.q_u = count_matrix(tree, level + 1, check.left_pos);
  check.q_w = count_matrix(tree, level + 1, check.right_pos);
  check.step = CountStepMatrix::for_digit(tree.digits().digits[static_cast<std::size_t>(level) + 1]);

  const CountMatrix expected_w{check.q_u.level_a, check.q_u.prefix_a,
                               check.q_u.level_b, check.q_u.prefix_b + Int128(1)};
  check.neighbor_identity = check.q_w == expected_w;

  const Int128 parity(level % 2);
  const CountStepMatrix& t = check.step;
  const CountMatrix stepped{
      t.m00 * check.q_v.level_a + t.m01 * check.q_v.level_b,
      t.m00 * check.q_v.prefix_a + t.m01 * check.q_v.prefix_b,
      t.m10 * check.q_v.level_a + t.m11 * check.q_v.level_b,
      t.m10 * check.q_v.prefix_a + t.m11 * check.q_v.prefix_b + parity};
  check.step_identity = check.q_w == stepped;
  return check;
}

BoundaryPath boundary_path(const SpectralTree& tree, int level, std::int64_t pos, int to_level) {
  const GapIndex origin = gap_index(tree, level, pos);
  if (origin.value.is_zero()) {
    throw InvalidArgument("boundary path is undefined for zero-index (unbounded) gaps");
  }
  if (to_level > tree.depth()) {
    throw InvalidArgument("path depth " + std::to_string(to_level) +
                          " exceeds built depth " + std::to_string(tree.depth()));
  }
  if (to_level < level) throw InvalidArgument("path target level above the origin");

  BoundaryPath path;
  path.origin_level = level;
  path.origin_position = pos;
  const bool positive = origin.value > Int128(0);
  const bool even = level % 2 == 0;
  path.side = (even == positive) ? PathSide::RightMost : PathSide::LeftMost;

  path.positions.push_back(pos);
  std::int64_t cur = pos;
  for (int k = level; k < to_level; ++k) {
    if (tree.label(k, cur) == Label::G) {
      cur = tree.first_child(k, cur);  // the single B-child
    } else {
      cur = path.side == PathSide::RightMost ? tree.last_child(k, cur)
                                             : tree.first_child(k, cur);
    }
    path.positions.push_back(cur);
  }
  return path;
}

ConservationCheck verify_conservation(const SpectralTree& tree, const BoundaryPath& path) {
  ConservationCheck check;
  const GapIndex origin =
      gap_index(tree, path.origin_level, path.origin_position);
  check.origin_value = origin.value;
  for (std::size_t i = 0; i < path.positions.size(); i += 2) {
    ConservationCheck::Entry entry;
    entry.index = gap_index(tree, path.level_of(i), path.positions[i]);
    entry.pass = entry.index.value == origin.value;
    check.entries.push_back(entry);
  }
  return check;
}

Int128 mod_inverse(Int128 p, Int128 q) {
  if (q < Int128(1)) throw InvalidArgument("modulus must be >= 1");
  if (Int128::gcd(p, q) != Int128(1)) {
    throw InvalidArgument("no inverse: " + p.str() + " and " + q.str() + " are not coprime");
  }
  if (q == Int128(1)) return Int128(0);
  // Extended Euclid on (p mod q, q); track only the coefficient of p.
  Int128 r0 = ((p % q) + q) % q;
  Int128 r1 = q;
  Int128 s0(1), s1(0);
  while (!r1.is_zero()) {
    Int128 quot = r0 / r1;
    Int128 r2 = r0 - quot * r1;
    Int128 s2 = s0 - quot * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return ((s0 % q) + q) % q;
}

Int128 solve_diophantine(Int128 n, Int128 p, Int128 q) {
  if (!(Int128(1) <= n && n <= q - Int128(1))) {
    throw InvalidArgument("gap number must satisfy 1 <= n <= q-1");
  }
  const Int128 inv = mod_inverse(p, q);
  return centered_mod(n * inv % q, q);
}

}  // namespace kohmoto
