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

#include "tree.hpp"

#include <string>

namespace kohmoto {

namespace {

// Hard cap on a single materialized level. Beyond this the per-vertex arrays
// no longer fit in memory; the caller asked for a depth/digit combination the
// toolkit cannot realize.
constexpr std::int64_t kMaxLevelSize = std::int64_t(1) << 26;

std::int64_t branch_count(Label label, std::int64_t next_digit) {
  if (label == Label::G) return 1;
  std::int64_t m = label == Label::A ? next_digit - 1 : next_digit;
  return 2 * m + 1;
}

}  // namespace

SpectralTree SpectralTree::build(const ContinuedFraction& digits, int depth) {
  if (depth < 0) throw InvalidArgument("tree depth must be >= 0");
  if (digits.size() < depth + 1) {
    throw InvalidArgument("tree depth " + std::to_string(depth) + " needs " +
                          std::to_string(depth + 1) + " digits, have " +
                          std::to_string(digits.size()));
  }

  SpectralTree tree;
  tree.digits_ = digits;
  tree.convergents_ = convergents(digits, depth);
  tree.levels_.resize(static_cast<std::size_t>(depth) + 1);

  // Level 0: the implicit root (level -1) has the left child A and the right
  // child G.
  TreeLevel& root_level = tree.levels_[0];
  root_level.labels = "AG";
  root_level.parent = {-1, -1};

  for (int k = 0; k < depth; ++k) {
    TreeLevel& cur = tree.levels_[static_cast<std::size_t>(k)];
    TreeLevel& next = tree.levels_[static_cast<std::size_t>(k) + 1];
    const std::int64_t a_next = digits.digits[static_cast<std::size_t>(k) + 1];

    std::int64_t next_size = 0;
    for (std::int64_t v = 0; v < cur.size(); ++v) {
      next_size += branch_count(static_cast<Label>(cur.labels[static_cast<std::size_t>(v)]),
                                a_next);
      if (next_size > kMaxLevelSize) {
        throw ComputeError("tree level " + std::to_string(k + 1) +
                           " exceeds the materialization limit");
      }
    }

    next.labels.reserve(static_cast<std::size_t>(next_size));
    next.parent.reserve(static_cast<std::size_t>(next_size));
    cur.child_begin.resize(static_cast<std::size_t>(cur.size()));

    for (std::int64_t v = 0; v < cur.size(); ++v) {
      cur.child_begin[static_cast<std::size_t>(v)] = next.size();
      const Label label = static_cast<Label>(cur.labels[static_cast<std::size_t>(v)]);
      if (label == Label::G) {
        next.labels.push_back('B');
        next.parent.push_back(v);
      } else {
        const std::int64_t children = branch_count(label, a_next);
        for (std::int64_t j = 0; j < children; ++j) {
          next.labels.push_back(j % 2 == 0 ? 'G' : 'A');
          next.parent.push_back(v);
        }
      }
    }
  }

  for (int k = 0; k <= depth; ++k) {
    TreeLevel& lvl = tree.levels_[static_cast<std::size_t>(k)];
    lvl.a_before.resize(static_cast<std::size_t>(lvl.size()));
    lvl.b_before.resize(static_cast<std::size_t>(lvl.size()));
    std::int64_t a = 0, b = 0;
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      lvl.a_before[static_cast<std::size_t>(v)] = a;
      lvl.b_before[static_cast<std::size_t>(v)] = b;
      const char c = lvl.labels[static_cast<std::size_t>(v)];
      if (c == 'A') ++a;
      if (c == 'B') ++b;
    }
    lvl.count_a = a;
    lvl.count_b = b;

    // Structural identities of the construction: the band vertices number
    // q_k, of which q_{k-1} carry label B.
    if (Int128(a + b) != tree.convergents_[static_cast<std::size_t>(k)].q) {
      throw ComputeError("tree invariant violated: band count != q_k at level " +
                         std::to_string(k));
    }
    const Int128 q_prev = k == 0 ? Int128(0) : tree.convergents_[static_cast<std::size_t>(k) - 1].q;
    if (Int128(b) != q_prev) {
      throw ComputeError("tree invariant violated: B count != q_{k-1} at level " +
                         std::to_string(k));
    }
  }

  return tree;
}

void SpectralTree::check_level(int k) const {
  if (k < 0 || k > depth()) {
    throw InvalidArgument("level " + std::to_string(k) + " outside built depth " +
                          std::to_string(depth()));
  }
}

void SpectralTree::check_vertex(int k, std::int64_t pos) const {
  check_level(k);
  if (pos < 0 || pos >= levels_[static_cast<std::size_t>(k)].size()) {
    throw InvalidArgument("vertex position " + std::to_string(pos) +
                          " outside level " + std::to_string(k));
  }
}

const TreeLevel& SpectralTree::level(int k) const {
  check_level(k);
  return levels_[static_cast<std::size_t>(k)];
}

LevelCounts SpectralTree::level_counts(int k) const {
  check_level(k);
  const TreeLevel& lvl = levels_[static_cast<std::size_t>(k)];
  return LevelCounts{k, lvl.count_a, lvl.count_b};
}

const Convergent& SpectralTree::convergent(int k) const {
  check_level(k);
  return convergents_[static_cast<std::size_t>(k)];
}

Label SpectralTree::label(int k, std::int64_t pos) const {
  check_vertex(k, pos);
  return static_cast<Label>(levels_[static_cast<std::size_t>(k)].labels[static_cast<std::size_t>(pos)]);
}

std::pair<std::int64_t, std::int64_t> SpectralTree::prefix_counts(int k, std::int64_t pos) const {
  if (label(k, pos) != Label::G) {
    throw InvalidArgument("prefix counts are defined for G-vertices only");
  }
  const TreeLevel& lvl = levels_[static_cast<std::size_t>(k)];
  return {lvl.a_before[static_cast<std::size_t>(pos)], lvl.b_before[static_cast<std::size_t>(pos)]};
}

std::int64_t SpectralTree::gap_number(int k, std::int64_t pos) const {
  auto [a, b] = prefix_counts(k, pos);
  return a + b;
}

std::int64_t SpectralTree::band_ordinal(int k, std::int64_t pos) const {
  if (label(k, pos) == Label::G) {
    throw InvalidArgument("band ordinal is defined for A/B vertices only");
  }
  const TreeLevel& lvl = levels_[static_cast<std::size_t>(k)];
  return lvl.a_before[static_cast<std::size_t>(pos)] + lvl.b_before[static_cast<std::size_t>(pos)];
}

std::int64_t SpectralTree::first_child(int k, std::int64_t pos) const {
  check_vertex(k, pos);
  if (k >= depth()) {
    throw InvalidArgument("vertex at the deepest level has no built children");
  }
  return levels_[static_cast<std::size_t>(k)].child_begin[static_cast<std::size_t>(pos)];
}

std::int64_t SpectralTree::last_child(int k, std::int64_t pos) const {
  check_vertex(k, pos);
  if (k >= depth()) {
    throw InvalidArgument("vertex at the deepest level has no built children");
  }
  const TreeLevel& lvl = levels_[static_cast<std::size_t>(k)];
  const std::int64_t end =
      pos + 1 < lvl.size() ? lvl.child_begin[static_cast<std::size_t>(pos) + 1]
                           : levels_[static_cast<std::size_t>(k) + 1].size();
  return end - 1;
}

}  // namespace kohmoto
