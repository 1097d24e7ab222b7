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
#include <utility>
#include <vector>

#include "ratcf.hpp"

namespace kohmoto {

/// Vertex label: A and B mark spectral bands, G marks a spectral gap.
enum class Label : char { A = 'A', B = 'B', G = 'G' };

/// One level of the spectral tree, stored as parallel arrays in spectral
/// (left-to-right) order. Children of consecutive vertices occupy consecutive
/// index ranges in the next level, so a single child_begin array suffices.
struct TreeLevel {
  std::string labels;                       // 'A' / 'B' / 'G' per vertex
  std::vector<std::int64_t> parent;         // index into previous level; -1 at level 0
  std::vector<std::int64_t> child_begin;    // index into next level; empty at the deepest level
  std::vector<std::int64_t> a_before;       // # of A-vertices strictly to the left
  std::vector<std::int64_t> b_before;       // # of B-vertices strictly to the left
  std::int64_t count_a = 0;                 // total A-vertices in the level
  std::int64_t count_b = 0;                 // total B-vertices in the level

  std::int64_t size() const { return static_cast<std::int64_t>(labels.size()); }
};

/// Per-level vertex counts (Z_A, Z_B); their sum equals the convergent
/// denominator q_k, and the B count equals q_{k-1}.
struct LevelCounts {
  int level = 0;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
};

/// The spectral tree of a continued fraction, built breadth-first to a fixed
/// depth. Level k encodes the bands and gaps of the q_k-periodic approximant:
///   * level 0 is always [A, G] (the two children of the implicit root);
///   * an A or B vertex at level k spawns 2M+1 children alternating
///     G,A,G,...,A,G, where M = a_{k+1}-1 for A and M = a_{k+1} for B;
///   * a G vertex spawns a single B child.
/// Immutable once built; a deterministic function of (digits, depth).
class SpectralTree {
 public:
  static SpectralTree build(const ContinuedFraction& digits, int depth);

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const ContinuedFraction& digits() const { return digits_; }

  const TreeLevel& level(int k) const;
  LevelCounts level_counts(int k) const;

  /// Convergent p_k/q_k for 0 <= k <= depth.
  const Convergent& convergent(int k) const;

  Label label(int k, std::int64_t pos) const;

  /// (z_A, z_B): counts of A and B vertices strictly left of a G-vertex.
  std::pair<std::int64_t, std::int64_t> prefix_counts(int k, std::int64_t pos) const;

  /// Gap number n of a G-vertex: the count of band vertices below it in
  /// energy, i.e. z_A + z_B. Ranges over 0..q_k; 0 and q_k are the unbounded
  /// gaps below and above the spectrum.
  std::int64_t gap_number(int k, std::int64_t pos) const;

  /// 0-based ordinal of an A/B vertex among the band vertices of its level.
  std::int64_t band_ordinal(int k, std::int64_t pos) const;

  /// Children of (k, pos) occupy [first_child, last_child] at level k+1.
  std::int64_t first_child(int k, std::int64_t pos) const;
  std::int64_t last_child(int k, std::int64_t pos) const;

 private:
  SpectralTree() = default;
  void check_level(int k) const;
  void check_vertex(int k, std::int64_t pos) const;

  ContinuedFraction digits_;
  std::vector<TreeLevel> levels_;
  std::vector<Convergent> convergents_;
};

}  // namespace kohmoto
