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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "emit.hpp"
#include "tree.hpp"

using namespace kohmoto;

namespace {

ContinuedFraction cf(std::initializer_list<std::int64_t> digits) {
  return ContinuedFraction(std::vector<std::int64_t>(digits));
}

std::vector<ContinuedFraction> random_corpus(int count, int depth, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int64_t> digit(1, 5);
  std::vector<ContinuedFraction> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::int64_t> digits{0};
    for (int j = 0; j < depth; ++j) digits.push_back(digit(rng));
    out.emplace_back(std::move(digits));
  }
  return out;
}

}  // namespace

TEST_CASE("level 0 is [A, G] for any digits") {
  for (const auto& digits : {cf({0}), cf({0, 1}), cf({0, 7, 3})}) {
    const SpectralTree tree = SpectralTree::build(digits, 0);
    CHECK(tree.level(0).labels == "AG");
    CHECK(tree.level(0).parent == std::vector<std::int64_t>{-1, -1});
  }
}

TEST_CASE("level 1 worked examples") {
  SUBCASE("digits 0,3 branch the A five ways") {
    const SpectralTree tree = SpectralTree::build(cf({0, 3}), 1);
    CHECK(tree.level(1).labels == "GAGAGB");
    CHECK(tree.level(1).parent == std::vector<std::int64_t>{0, 0, 0, 0, 0, 1});
    CHECK(tree.level_counts(1).count_a + tree.level_counts(1).count_b == 3);  // q_1
  }
  SUBCASE("digits 0,1 give the single-gap level") {
    const SpectralTree tree = SpectralTree::build(cf({0, 1}), 1);
    CHECK(tree.level(1).labels == "GB");
    CHECK(tree.level_counts(1).count_a + tree.level_counts(1).count_b == 1);
  }
}

TEST_CASE("level counts on the worked examples") {
  const SpectralTree tree = SpectralTree::build(cf({0, 3, 2}), 2);
  CHECK(tree.level_counts(0).count_a == 1);
  CHECK(tree.level_counts(0).count_b == 0);
  CHECK(tree.level_counts(1).count_a == 2);
  CHECK(tree.level_counts(1).count_b == 1);
  CHECK_THROWS_AS(tree.level_counts(3), InvalidArgument);
  CHECK_THROWS_AS(tree.level_counts(-1), InvalidArgument);
}

TEST_CASE("prefix counts on the worked examples") {
  const SpectralTree tree = SpectralTree::build(cf({0, 3, 2}), 2);
  // The level-0 G has exactly the A to its left.
  CHECK(tree.prefix_counts(0, 1) == std::pair<std::int64_t, std::int64_t>{1, 0});
  // The left-most vertex of an odd level is a G with nothing to its left.
  CHECK(tree.label(1, 0) == Label::G);
  CHECK(tree.prefix_counts(1, 0) == std::pair<std::int64_t, std::int64_t>{0, 0});
  // Consecutive G-children of one band vertex differ by exactly one A.
  CHECK(tree.prefix_counts(1, 2) == std::pair<std::int64_t, std::int64_t>{1, 0});
  CHECK(tree.prefix_counts(1, 4) == std::pair<std::int64_t, std::int64_t>{2, 0});
  CHECK_THROWS_AS(tree.prefix_counts(1, 1), InvalidArgument);  // an A-vertex
}

TEST_CASE("build preconditions") {
  CHECK_THROWS_AS(SpectralTree::build(cf({0, 2}), 2), InvalidArgument);  // digits too short
  CHECK_THROWS_AS(SpectralTree::build(cf({0}), -1), InvalidArgument);
  CHECK_THROWS_AS(SpectralTree::build(cf({0, 2}), 1).label(1, 99), InvalidArgument);
}

TEST_CASE("structural invariants on random trees") {
  for (const ContinuedFraction& digits : random_corpus(25, 6, 123)) {
    const SpectralTree tree = SpectralTree::build(digits, 6);
    const auto convs = convergents(digits, 6);
    for (int k = 0; k <= 6; ++k) {
      const TreeLevel& lvl = tree.level(k);
      const LevelCounts counts = tree.level_counts(k);

      // Band totals match the convergent ladder.
      CHECK(Int128(counts.count_a + counts.count_b) == convs[static_cast<std::size_t>(k)].q);
      const Int128 q_prev = k == 0 ? Int128(0) : convs[static_cast<std::size_t>(k) - 1].q;
      CHECK(Int128(counts.count_b) == q_prev);

      // The left-most vertex alternates: A at level 0, G at odd levels, and
      // levels alternate G and band vertices pointwise.
      if (k == 0) CHECK(lvl.labels.front() == 'A');
      if (k % 2 == 1) CHECK(lvl.labels.front() == 'G');
      for (std::int64_t v = 0; v + 1 < lvl.size(); ++v) {
        const bool gap = lvl.labels[static_cast<std::size_t>(v)] == 'G';
        const bool next_gap = lvl.labels[static_cast<std::size_t>(v) + 1] == 'G';
        CHECK(gap != next_gap);
      }

      if (k == 6) continue;
      const std::int64_t a_next = digits.digits[static_cast<std::size_t>(k) + 1];
      for (std::int64_t v = 0; v < lvl.size(); ++v) {
        const std::int64_t first = tree.first_child(k, v);
        const std::int64_t last = tree.last_child(k, v);
        const std::string& child_labels = tree.level(k + 1).labels;
        if (lvl.labels[static_cast<std::size_t>(v)] == 'G') {
          CHECK(last - first + 1 == 1);
          CHECK(child_labels[static_cast<std::size_t>(first)] == 'B');
        } else {
          const std::int64_t m =
              lvl.labels[static_cast<std::size_t>(v)] == 'A' ? a_next - 1 : a_next;
          CHECK(last - first + 1 == 2 * m + 1);
          for (std::int64_t c = first; c <= last; ++c) {
            CHECK(child_labels[static_cast<std::size_t>(c)] == ((c - first) % 2 == 0 ? 'G' : 'A'));
          }
        }
      }
    }
  }
}

TEST_CASE("gap numbers increase by one along each level") {
  const SpectralTree tree = SpectralTree::build(cf({0, 2, 3, 1, 2}), 4);
  for (int k = 0; k <= 4; ++k) {
    const TreeLevel& lvl = tree.level(k);
    std::int64_t expected = lvl.labels.front() == 'G' ? 0 : 1;
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
      CHECK(tree.gap_number(k, v) == expected);
      ++expected;
    }
  }
}

TEST_CASE("prefix stability: deeper builds extend shallower ones") {
  const ContinuedFraction digits = cf({0, 2, 1, 3, 1, 2});
  const SpectralTree deep = SpectralTree::build(digits, 5);
  const SpectralTree shallow = SpectralTree::build(digits, 3);
  for (int k = 0; k <= 3; ++k) {
    CHECK(deep.level(k).labels == shallow.level(k).labels);
    CHECK(deep.level(k).parent == shallow.level(k).parent);
  }
}

TEST_CASE("tree JSON matches the golden file") {
  const SpectralTree tree = SpectralTree::build(cf({0, 2, 1}), 2);
  CHECK(tree.level(2).labels == "BGBGAG");
  const std::string json = tree_json(tree, false, "");
  std::ifstream golden(std::string(KOHMOTO_TEST_DATA_DIR) + "/tree_0_2_1_depth2.json");
  REQUIRE(golden.good());
  std::stringstream expected;
  expected << golden.rdbuf();
  CHECK(json == expected.str());
}
