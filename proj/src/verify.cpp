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

#include "verify.hpp"

#include <json.hpp>

#include <random>
#include <set>
#include <vector>

#include "indexing.hpp"
#include "spectrum.hpp"
#include "tree.hpp"

namespace kohmoto {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kMaxSpectrumPeriod = 4096;

ordered_json json_int(const Int128& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.str();
}

struct Sink {
  std::string& out;
  std::int64_t& checks;
  std::int64_t& failures;

  void emit(ordered_json record, bool pass) {
    record["pass"] = pass;
    out += record.dump();
    out += "\n";
    ++checks;
    if (!pass) ++failures;
  }
  void meta(ordered_json record) {
    out += record.dump();
    out += "\n";
  }
};

ordered_json matrix_json(const CountMatrix& m) {
  return ordered_json::array({ordered_json::array({json_int(m.level_a), json_int(m.prefix_a)}),
                              ordered_json::array({json_int(m.level_b), json_int(m.prefix_b)})});
}

Int128 oracle_value(const SpectralTree& tree, const GapIndex& idx) {
  // Unbounded gaps (n = 0 mod q) solve the Diophantine relation with c = 0;
  // bounded gaps have the unique centered solution.
  if (Int128(idx.gap_number) % idx.q == Int128(0)) return Int128(0);
  return solve_diophantine(Int128(idx.gap_number), tree.convergent(idx.level).p, idx.q);
}

void run_range(const SpectralTree& tree, const std::string& digits, Sink& sink) {
  for (int k = 0; k <= tree.depth(); ++k) {
    const TreeLevel& lvl = tree.level(k);
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
      const GapIndex idx = gap_index(tree, k, v);
      const bool pass = Int128(0) <= idx.raw && idx.raw < idx.q;
      sink.emit({{"suite", "range"},
                 {"digits", digits},
                 {"level", k},
                 {"position", v},
                 {"raw", json_int(idx.raw)},
                 {"value", json_int(idx.value)},
                 {"q", json_int(idx.q)}},
                pass);
    }
  }
}

void run_oracle(const SpectralTree& tree, const std::string& digits, Sink& sink) {
  for (int k = 0; k <= tree.depth(); ++k) {
    const TreeLevel& lvl = tree.level(k);
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
      const GapIndex idx = gap_index(tree, k, v);
      const Int128 expected = oracle_value(tree, idx);
      sink.emit({{"suite", "oracle"},
                 {"digits", digits},
                 {"level", k},
                 {"position", v},
                 {"n", idx.gap_number},
                 {"raw", json_int(idx.raw)},
                 {"value", json_int(idx.value)},
                 {"oracle", json_int(expected)}},
                idx.value == expected);
    }
  }
}

void run_recursion(const SpectralTree& tree, const std::string& digits, Sink& sink) {
  for (int k = 0; k < tree.depth(); ++k) {
    const TreeLevel& lvl = tree.level(k);
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
      if (!recursion_admissible(tree, k, v)) continue;
      const RecursionCheck check = verify_count_recursion(tree, k, v);
      sink.emit({{"suite", "recursion"},
                 {"digits", digits},
                 {"level", k},
                 {"position", v},
                 {"left", check.left_pos},
                 {"right", check.right_pos},
                 {"q_v", matrix_json(check.q_v)},
                 {"q_u", matrix_json(check.q_u)},
                 {"q_w", matrix_json(check.q_w)},
                 {"neighbor_identity", check.neighbor_identity},
                 {"step_identity", check.step_identity}},
                check.pass());
    }
  }
}

void run_conservation(const SpectralTree& tree, const std::string& digits, Sink& sink) {
  const int max_origin_level = std::min(4, tree.depth());
  for (int k = 0; k <= max_origin_level; ++k) {
    const TreeLevel& lvl = tree.level(k);
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
      if (gap_index(tree, k, v).value.is_zero()) continue;
      const BoundaryPath path = boundary_path(tree, k, v, tree.depth());
      const ConservationCheck check = verify_conservation(tree, path);
      for (const auto& entry : check.entries) {
        sink.emit({{"suite", "conservation"},
                   {"digits", digits},
                   {"origin_level", k},
                   {"origin_position", v},
                   {"origin_value", json_int(check.origin_value)},
                   {"level", entry.index.level},
                   {"position", entry.index.position},
                   {"raw", json_int(entry.index.raw)},
                   {"value", json_int(entry.index.value)},
                   {"q", json_int(entry.index.q)}},
                  entry.pass);
      }
    }
  }
}

void run_nesting(const SpectralTree& tree, const std::string& digits, double lambda,
                 double tolerance, Sink& sink) {
  if (tree.convergent(tree.depth()).q > Int128(kMaxSpectrumPeriod)) {
    throw ComputeError("nesting verification needs q_depth <= " +
                       std::to_string(kMaxSpectrumPeriod));
  }
  const std::vector<Spectrum> spectra = level_spectra(tree, lambda, tree.depth());
  for (int k = 1; k <= tree.depth(); ++k) {
    const TreeLevel& lvl = tree.level(k);
    for (std::int64_t v = 0; v < lvl.size(); ++v) {
      if (lvl.labels[static_cast<std::size_t>(v)] == 'G') continue;
      const BandInterval band = band_for_vertex(tree, spectra, k, v);
      // Walk the ancestor chain; every band vertex on it must contain `band`.
      bool pass = true;
      double worst = 0.0;
      int level = k;
      std::int64_t pos = v;
      while (level > 0) {
        pos = tree.level(level).parent[static_cast<std::size_t>(pos)];
        --level;
        if (tree.label(level, pos) == Label::G) continue;
        const BandInterval ancestor = band_for_vertex(tree, spectra, level, pos);
        const double slack =
            std::max(ancestor.lo - band.lo, band.hi - ancestor.hi);
        worst = std::max(worst, slack);
        if (slack > tolerance) pass = false;
      }
      sink.emit({{"suite", "nesting"},
                 {"digits", digits},
                 {"level", k},
                 {"position", v},
                 {"band", {band.lo, band.hi}},
                 {"worst_slack", worst}},
                pass);
    }
  }
}

void run_convergence(const SpectralTree& tree, const std::string& digits,
                     const VerifyOptions& options, Sink& sink) {
  int level = options.origin_level;
  std::int64_t pos = options.origin_position;
  if (level < 0) {
    // First bounded gap in level order: the lowest-level G with nonzero index.
    bool found = false;
    for (int k = 0; k <= tree.depth() && !found; ++k) {
      const TreeLevel& lvl = tree.level(k);
      for (std::int64_t v = 0; v < lvl.size(); ++v) {
        if (lvl.labels[static_cast<std::size_t>(v)] != 'G') continue;
        if (gap_index(tree, k, v).value.is_zero()) continue;
        level = k;
        pos = v;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("tree has no bounded gap to follow");
  }
  if (tree.convergent(tree.depth()).q > Int128(kMaxSpectrumPeriod)) {
    throw ComputeError("convergence verification needs q_depth <= " +
                       std::to_string(kMaxSpectrumPeriod));
  }
  const ConvergenceReport report =
      gap_convergence(tree, level, pos, tree.depth() - level, options.lambda);
  const bool rightmost = report.side == PathSide::RightMost;
  for (std::size_t m = 0; m < report.steps.size(); ++m) {
    const ConvergenceStep& step = report.steps[m];
    // The tracked gap endpoint coincides with the inner edge of its own
    // companion band by spectral adjacency.
    const double edge = rightmost ? step.band.lo : step.band.hi;
    const bool pass = step.index_value == report.origin_value &&
                      std::abs(step.tracked_endpoint - edge) <= 1e-9;
    sink.emit({{"suite", "convergence"},
               {"digits", digits},
               {"m", m},
               {"level", step.level},
               {"position", step.position},
               {"gap", {step.gap.lo, step.gap.hi}},
               {"value", json_int(step.index_value)},
               {"endpoint", step.tracked_endpoint},
               {"band", {step.band.lo, step.band.hi}},
               {"band_width", step.band.width()}},
              pass);
  }
  sink.emit({{"suite", "convergence"},
             {"digits", digits},
             {"level", level},
             {"position", pos},
             {"widths_strictly_decreasing", report.widths_strictly_decreasing},
             {"bands_nested", report.bands_nested},
             {"endpoints_enter_bands", report.endpoints_enter_bands},
             {"endpoint_steps_bounded", report.endpoint_steps_bounded},
             {"indices_conserved", report.indices_conserved}},
            report.pass());
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
  static const std::set<std::string> kSuites{"recursion", "conservation", "range",
                                             "oracle", "nesting", "convergence", "all"};
  if (!kSuites.count(options.suite)) {
    throw InvalidArgument("unknown suite '" + options.suite + "'");
  }
  const bool all = options.suite == "all";
  const bool fuzzing = !options.digits.has_value();
  if (fuzzing && options.fuzz <= 0) {
    throw InvalidArgument("either digits or a fuzz count is required");
  }
  if (fuzzing && (options.suite == "nesting" || options.suite == "convergence")) {
    throw InvalidArgument("suite '" + options.suite + "' needs an explicit digit sequence");
  }
  if (options.depth < 0) throw InvalidArgument("depth must be >= 0");

  std::vector<ContinuedFraction> corpus;
  if (!fuzzing) {
    corpus.push_back(*options.digits);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> digit(1, std::max(1, options.max_digit));
    for (int i = 0; i < options.fuzz; ++i) {
      std::vector<std::int64_t> digits(static_cast<std::size_t>(options.depth) + 1);
      digits[0] = 0;
      for (std::size_t j = 1; j < digits.size(); ++j) digits[j] = digit(rng);
      corpus.emplace_back(std::move(digits));
    }
  }

  VerifyResult result;
  Sink sink{result.report_jsonl, result.checks, result.failures};

  for (const ContinuedFraction& digits : corpus) {
    const int depth = std::min(options.depth, digits.size() - 1);
    const SpectralTree tree = SpectralTree::build(digits, depth);
    const std::string digit_str = digits.str();
    sink.meta({{"record", "tree"},
               {"suite", options.suite},
               {"digits", digit_str},
               {"requested_depth", options.depth},
               {"depth", depth}});
    if (all || options.suite == "range") run_range(tree, digit_str, sink);
    if (all || options.suite == "oracle") run_oracle(tree, digit_str, sink);
    if (all || options.suite == "recursion") run_recursion(tree, digit_str, sink);
    if (all || options.suite == "conservation") run_conservation(tree, digit_str, sink);
    if (!fuzzing && (all || options.suite == "nesting")) {
      run_nesting(tree, digit_str, options.lambda, options.tolerance, sink);
    }
    if (!fuzzing && (all || options.suite == "convergence")) {
      run_convergence(tree, digit_str, options, sink);
    }
  }
  return result;
}

}  // namespace kohmoto
