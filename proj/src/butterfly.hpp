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
#include <string>
#include <vector>

#include "spectrum.hpp"

namespace kohmoto {

/// All coprime p/q with 1 <= p < q <= q_max, ordered by q then p.
std::vector<Rational> enumerate_rationals(std::int64_t q_max);

struct ButterflyRow {
  Rational alpha;
  Spectrum spectrum;
  bool failed = false;
  std::string error;
};

struct ButterflyDataset {
  double lambda = 1.0;
  std::int64_t q_max = 0;
  std::vector<ButterflyRow> rows;
};

/// One spectrum per coprime rational, every bounded gap annotated with its
/// Diophantine index. Row failures are recorded on the row, never abort the
/// sweep.
ButterflyDataset build_dataset(std::int64_t q_max, double lambda);

/// Diagnostic statistics relating gap width to the index. The trend (wider
/// gaps at smaller |index|, and the negative index dominating its positive
/// mirror) is an empirical observation, so this is a report, never a failure.
struct GapWidthReport {
  struct IndexClass {
    std::int64_t abs_index = 0;
    std::int64_t count = 0;
    double mean_width = 0.0;
    double min_width = 0.0;
    double max_width = 0.0;
  };
  struct SignedPair {
    Rational alpha;
    std::int64_t abs_index = 0;
    double width_negative = 0.0;
    double width_positive = 0.0;
  };
  std::vector<IndexClass> classes;       // ascending |index|
  std::vector<SignedPair> pairs;         // rows containing both +j and -j
  std::int64_t pairs_negative_wider = 0; // how many pairs follow the trend
};

GapWidthReport gap_width_report(const ButterflyDataset& dataset);

}  // namespace kohmoto
