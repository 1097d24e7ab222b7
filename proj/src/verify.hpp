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
#include <optional>
#include <string>

#include "ratcf.hpp"

namespace kohmoto {

/// Verification suites over spectral trees. Every suite scans its corpus to
/// completion and reports each check as one JSON line; counterexamples are
/// collected, never thrown.
///
///   recursion    -- the count-matrix step identities, every admissible triple
///   range        -- raw index in [0, q_k) for every G-vertex
///   oracle       -- tree gap index == closed-form Diophantine solution
///   conservation -- index constant along every boundary path (origins at
///                   levels <= 4 with nonzero index)
///   nesting      -- every band vertex interval inside each band ancestor's
///   convergence  -- gap interval convergence along one boundary path
///   all          -- every suite applicable to the input
///
/// The corpus is either one digit sequence (`digits`) or `fuzz` random
/// sequences with digits uniform in [1, max_digit], reproducible from `seed`.
/// The nesting and convergence suites need spectra and accept only explicit
/// digits. When the digit list supports less than the requested depth, the
/// tree is built to the largest available depth and the report says so.
struct VerifyOptions {
  std::string suite = "all";
  std::optional<ContinuedFraction> digits;
  int depth = 8;
  int fuzz = 0;
  int max_digit = 5;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  double tolerance = 1e-8;
  int origin_level = -1;     // convergence origin; -1 = first bounded gap
  std::int64_t origin_position = -1;
};

struct VerifyResult {
  std::string report_jsonl;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
};

VerifyResult run_verify(const VerifyOptions& options);

}  // namespace kohmoto
