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

#include "butterfly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kohmoto {

std::vector<Rational> enumerate_rationals(std::int64_t q_max) {
  if (q_max < 1) throw InvalidArgument("q_max must be >= 1");
  std::vector<Rational> out;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(Rational::reduced(Int128(p), Int128(q)));
    }
  }
  return out;
}

ButterflyDataset build_dataset(std::int64_t q_max, double lambda) {
  if (q_max < 2) throw InvalidArgument("butterfly needs q_max >= 2");
  ButterflyDataset dataset;
  dataset.lambda = lambda;
  dataset.q_max = q_max;
  for (const Rational& alpha : enumerate_rationals(q_max)) {
    ButterflyRow row;
    row.alpha = alpha;
    try {
      row.spectrum = compute_spectrum(potential_sequence(alpha, lambda));
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
    dataset.rows.push_back(std::move(row));
  }
  return dataset;
}

GapWidthReport gap_width_report(const ButterflyDataset& dataset) {
  GapWidthReport report;
  std::map<std::int64_t, std::vector<double>> widths_by_abs;

  for (const ButterflyRow& row : dataset.rows) {
    if (row.failed) continue;
    std::map<std::int64_t, double> widths_by_index;
    for (const GapInterval& gap : row.spectrum.gaps) {
      if (gap.number == 0 || gap.number == row.spectrum.period()) continue;
      const std::int64_t index = gap.index.to_int64();
      widths_by_abs[std::llabs(index)].push_back(gap.width());
      widths_by_index[index] = gap.width();
    }
    for (const auto& [index, width] : widths_by_index) {
      if (index <= 0) continue;
      auto negative = widths_by_index.find(-index);
      if (negative == widths_by_index.end()) continue;
      GapWidthReport::SignedPair pair;
      pair.alpha = row.alpha;
      pair.abs_index = index;
      pair.width_positive = width;
      pair.width_negative = negative->second;
      if (pair.width_negative > pair.width_positive) ++report.pairs_negative_wider;
      report.pairs.push_back(pair);
    }
  }

  for (const auto& [abs_index, widths] : widths_by_abs) {
    GapWidthReport::IndexClass cls;
    cls.abs_index = abs_index;
    cls.count = static_cast<std::int64_t>(widths.size());
    cls.mean_width = std::accumulate(widths.begin(), widths.end(), 0.0) /
                     static_cast<double>(widths.size());
    cls.min_width = *std::min_element(widths.begin(), widths.end());
    cls.max_width = *std::max_element(widths.begin(), widths.end());
    report.classes.push_back(cls);
  }
  return report;
}

}  // namespace kohmoto
