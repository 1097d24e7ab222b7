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

// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any gating criterion fails. Criterion 11 is a
// diagnostic: its deviations are reported but never fail the run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "butterfly.hpp"
#include "emit.hpp"
#include "indexing.hpp"
#include "spectrum.hpp"
#include "tree.hpp"

using namespace kohmoto;

namespace {

struct Outcome {
  bool pass = false;
  bool gating = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<ContinuedFraction> seeded_corpus(int count, int depth, int max_digit,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> digit(1, max_digit);
  std::vector<ContinuedFraction> corpus;
  for (int i = 0; i < count; ++i) {
    std::vector<std::int64_t> digits{0};
    for (int j = 0; j < depth; ++j) digits.push_back(digit(rng));
    corpus.emplace_back(std::move(digits));
  }
  return corpus;
}

// Criteria 1-3 share this corpus: 100 random digit sequences, digits in
// [1,5], depth 8, fixed seed.
const std::vector<ContinuedFraction>& shared_corpus() {
  static const auto corpus = seeded_corpus(100, 8, 5, 20260810);
  return corpus;
}

std::vector<std::int64_t> g_positions(const SpectralTree& tree, int level) {
  std::vector<std::int64_t> out;
  const TreeLevel& lvl = tree.level(level);
  for (std::int64_t v = 0; v < lvl.size(); ++v) {
    if (lvl.labels[static_cast<std::size_t>(v)] == 'G') out.push_back(v);
  }
  return out;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

char buffer[512];

// --- criterion 1: tree index equals the Diophantine closed form ------------

Outcome criterion_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::int64_t checked = 0, failures = 0;
  for (const ContinuedFraction& digits : shared_corpus()) {
    const SpectralTree tree = SpectralTree::build(digits, 8);
    for (int k = 0; k <= 8; ++k) {
      const Convergent& conv = tree.convergent(k);
      for (std::int64_t v : g_positions(tree, k)) {
        const GapIndex idx = gap_index(tree, k, v);
        const Int128 n(idx.gap_number);
        const Int128 expected =
            (n % conv.q).is_zero() ? Int128(0) : solve_diophantine(n, conv.p, conv.q);
        ++checked;
        failures += idx.value != expected;
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer),
                "100 trees depth 8, %lld gap vertices, %lld failures, %.1fs (limit 10s)",
                static_cast<long long>(checked), static_cast<long long>(failures), elapsed);
  return {failures == 0 && elapsed < 10.0, true, buffer};
}

// --- criterion 2: count-matrix recursion, every admissible triple ----------

Outcome criterion_recursion() {
  std::int64_t checked = 0, failures = 0;
  for (const ContinuedFraction& digits : shared_corpus()) {
    const SpectralTree tree = SpectralTree::build(digits, 8);
    for (int k = 0; k < 8; ++k) {
      for (std::int64_t v : g_positions(tree, k)) {
        if (!recursion_admissible(tree, k, v)) continue;
        ++checked;
        failures += !verify_count_recursion(tree, k, v).pass();
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer), "%lld admissible triples, %lld failures",
                static_cast<long long>(checked), static_cast<long long>(failures));
  return {failures == 0, true, buffer};
}

// --- criterion 3: raw index in [0, q_k) ------------------------------------

Outcome criterion_range() {
  std::int64_t checked = 0, failures = 0;
  for (const ContinuedFraction& digits : shared_corpus()) {
    const SpectralTree tree = SpectralTree::build(digits, 8);
    for (int k = 0; k <= 8; ++k) {
      for (std::int64_t v : g_positions(tree, k)) {
        const GapIndex idx = gap_index(tree, k, v);
        ++checked;
        failures += !(Int128(0) <= idx.raw && idx.raw < idx.q);
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer), "%lld gap vertices, %lld failures",
                static_cast<long long>(checked), static_cast<long long>(failures));
  return {failures == 0, true, buffer};
}

// --- criterion 4: conservation along boundary paths -------------------------

Outcome criterion_conservation() {
  std::vector<ContinuedFraction> corpus = seeded_corpus(25, 12, 3, 0xC0FFEE);
  corpus.push_back(ContinuedFraction::ones(12));
  corpus.push_back(ContinuedFraction::parse("0,2,1,1,1,1,1,1,1,1,1,1,1"));
  corpus.push_back(ContinuedFraction::parse("0,3,2,1,2,1,1,1,1,1,1,1,1"));

  std::int64_t paths = 0, failures = 0;
  for (const ContinuedFraction& digits : corpus) {
    const SpectralTree tree = SpectralTree::build(digits, 12);
    for (int k = 0; k <= 4; ++k) {
      for (std::int64_t v : g_positions(tree, k)) {
        if (gap_index(tree, k, v).value.is_zero()) continue;
        ++paths;
        failures += !verify_conservation(tree, boundary_path(tree, k, v, 12)).pass();
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer),
                "%zu trees depth 12, %lld paths from levels <= 4, %lld failures",
                corpus.size(), static_cast<long long>(paths),
                static_cast<long long>(failures));
  return {failures == 0, true, buffer};
}

// --- criterion 5: the q = 2 closed-form anchor ------------------------------

Outcome criterion_anchor() {
  const Spectrum s = compute_spectrum(potential_sequence(Rational::parse("1/2"), 1.0));
  const double root = std::sqrt(17.0);
  const double err = std::max(
      std::max(std::abs(s.bands[0].lo - (1.0 - root) / 2.0), std::abs(s.bands[0].hi)),
      std::max(std::abs(s.bands[1].lo - 1.0), std::abs(s.bands[1].hi - (1.0 + root) / 2.0)));
  const bool index_ok = s.gaps[1].index == Int128(-1);
  std::snprintf(buffer, sizeof(buffer),
                "band-edge error %.2e (tol 1e-10), bounded gap index %s (want -1)", err,
                s.gaps[1].index.str().c_str());
  return {err <= 1e-10 && index_ok, true, buffer};
}

// --- criterion 6: band count and edge residual over the full sweep ----------

Outcome criterion_band_sweep() {
  const auto start = std::chrono::steady_clock::now();
  std::int64_t spectra = 0, count_failures = 0, residual_failures = 0;
  double worst_residual = 0.0;
  std::string worst_at;
  for (double lambda : {0.5, 1.0, 2.0}) {
    for (std::int64_t q = 2; q <= 40; ++q) {
      for (std::int64_t p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Spectrum s =
            compute_spectrum(potential_sequence(Rational::reduced(Int128(p), Int128(q)), lambda));
        ++spectra;
        count_failures += static_cast<std::int64_t>(s.bands.size()) != q;
        if (s.max_edge_residual > 1e-9) ++residual_failures;
        if (s.max_edge_residual > worst_residual) {
          worst_residual = s.max_edge_residual;
          worst_at = std::to_string(p) + "/" + std::to_string(q) + " lambda=" +
                     (lambda == 0.5 ? "0.5" : lambda == 1.0 ? "1" : "2");
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::snprintf(
      buffer, sizeof(buffer),
      "%lld spectra: band count failures %lld; residual>1e-9 in %lld spectra, worst %.2e "
      "at %s (f64 edge-quantization floor at needle bands; see docs); %.1fs (limit 60s)",
      static_cast<long long>(spectra), static_cast<long long>(count_failures),
      static_cast<long long>(residual_failures), worst_residual, worst_at.c_str(), elapsed);
  return {count_failures == 0 && residual_failures == 0 && elapsed < 60.0, true, buffer};
}

// --- criterion 7: band nesting on the named trees ----------------------------

Outcome criterion_nesting() {
  std::int64_t checked = 0, failures = 0;
  for (const char* digit_text : {"0,1,1,1,1,1,1", "0,3,2,1,2,1,1"}) {
    const SpectralTree tree = SpectralTree::build(ContinuedFraction::parse(digit_text), 6);
    const auto spectra = level_spectra(tree, 1.0, 6);
    for (int k = 1; k <= 6; ++k) {
      const TreeLevel& lvl = tree.level(k);
      for (std::int64_t v = 0; v < lvl.size(); ++v) {
        if (lvl.labels[static_cast<std::size_t>(v)] == 'G') continue;
        const BandInterval band = band_for_vertex(tree, spectra, k, v);
        int level = k;
        std::int64_t pos = v;
        while (level > 0) {
          pos = tree.level(level).parent[static_cast<std::size_t>(pos)];
          --level;
          if (tree.label(level, pos) == Label::G) continue;
          const BandInterval ancestor = band_for_vertex(tree, spectra, level, pos);
          ++checked;
          failures += band.lo < ancestor.lo - 1e-8 || band.hi > ancestor.hi + 1e-8;
        }
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer),
                "2 trees depth 6, %lld ancestor containments (slack 1e-8), %lld failures",
                static_cast<long long>(checked), static_cast<long long>(failures));
  return {failures == 0, true, buffer};
}

// --- criterion 8: gap convergence along the golden-mean path -----------------

Outcome criterion_convergence() {
  const SpectralTree tree = SpectralTree::build(ContinuedFraction::ones(12), 12);
  // The first bounded gap of the golden-mean tree. (Level 1 has only the
  // unbounded zero-index gap, since q_1 = 1; the first nonzero-index gap sits
  // at level 2 and is the canonical q = 2 gap with index -1.)
  int level = -1;
  std::int64_t pos = -1;
  for (int k = 0; k <= tree.depth() && level < 0; ++k) {
    for (std::int64_t v : g_positions(tree, k)) {
      if (!gap_index(tree, k, v).value.is_zero()) {
        level = k;
        pos = v;
        break;
      }
    }
  }
  const ConvergenceReport report = gap_convergence(tree, level, pos, 10, 1.0);
  const double initial = report.steps.front().band.width();
  const double final_width = report.steps.back().band.width();
  const bool ratio_ok = final_width < 1e-2 * initial;
  std::snprintf(buffer, sizeof(buffer),
                "origin level %d (q=2 gap, index %s); widths decreasing=%d nested=%d "
                "endpoint steps bounded=%d; final/initial width %.2e (tol 1e-2)",
                level, report.origin_value.str().c_str(),
                report.widths_strictly_decreasing, report.bands_nested,
                report.endpoint_steps_bounded, final_width / initial);
  return {report.pass() && ratio_ok, true, buffer};
}

// --- criterion 9: IDS identity in exact rationals ----------------------------

Outcome criterion_ids() {
  std::int64_t checked = 0, failures = 0;
  for (std::int64_t q = 2; q <= 30; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = 1; n < q; ++n) {
        const Int128 c = solve_diophantine(Int128(n), Int128(p), Int128(q));
        const Int128 residue =
            ((c * Int128(p) - Int128(n)) % Int128(q) + Int128(q)) % Int128(q);
        ++checked;
        failures += !residue.is_zero();
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer), "%lld bounded gaps with q <= 30, %lld failures",
                static_cast<long long>(checked), static_cast<long long>(failures));
  return {failures == 0, true, buffer};
}

// --- criterion 10: butterfly dataset reproduction ----------------------------

Outcome criterion_butterfly() {
  const auto start = std::chrono::steady_clock::now();
  const ButterflyDataset a = build_dataset(50, 1.0);
  const double build_seconds = seconds_since(start);
  const ButterflyDataset b = build_dataset(50, 1.0);

  const std::string config = "subcommand=butterfly\nqmax=50\nlambda=1\n";
  const bool deterministic = dataset_json(a, config) == dataset_json(b, config) &&
                             dataset_csv(a, config) == dataset_csv(b, config) &&
                             dataset_svg(a, SvgOptions{}, config) ==
                                 dataset_svg(b, SvgOptions{}, config);

  const std::int64_t rows = static_cast<std::int64_t>(a.rows.size());

  std::int64_t bounded = 0;
  std::set<std::int64_t> indices;
  for (const ButterflyRow& row : a.rows) {
    for (const GapInterval& gap : row.spectrum.gaps) {
      if (gap.number == 0 || gap.number == row.spectrum.period() || gap.degenerate) continue;
      ++bounded;
      indices.insert(gap.index.to_int64());
    }
  }
  const std::string svg = dataset_svg(a, SvgOptions{}, config);
  const std::size_t painted = count_occurrences(svg, "data-index=") - indices.size();
  const bool paints_bounded_only = painted == static_cast<std::size_t>(bounded);
  bool legend_complete = true;
  for (std::int64_t index : indices) {
    legend_complete &=
        count_occurrences(svg, "data-index=\"" + std::to_string(index) + "\"") >= 2;
  }

  // The row count must equal the totient summation over q = 2..50, computed
  // here by brute force; it evaluates to 773. (Summing from q = 1 instead
  // gives 774, but a q = 1 row has no interior rational to plot.)
  std::int64_t expected_rows = 0;
  for (std::int64_t q = 2; q <= 50; ++q) {
    for (std::int64_t p = 1; p < q; ++p) expected_rows += std::gcd(p, q) == 1;
  }

  std::snprintf(buffer, sizeof(buffer),
                "%lld rows (totient sum q=2..50 gives %lld), build %.1fs (limit 60s), "
                "deterministic=%d, %zu painted segments = %lld bounded gaps, legend covers "
                "%zu indices=%d",
                static_cast<long long>(rows), static_cast<long long>(expected_rows),
                build_seconds, deterministic, painted, static_cast<long long>(bounded),
                indices.size(), legend_complete);
  return {rows == expected_rows && build_seconds < 60.0 && deterministic &&
              paints_bounded_only && legend_complete,
          true, buffer};
}

// --- criterion 11 (diagnostic): gap width versus index -----------------------

Outcome criterion_width_observation() {
  const ButterflyDataset dataset = build_dataset(20, 1.0);
  const GapWidthReport report = gap_width_report(dataset);
  std::int64_t deviations = 0;
  for (const auto& pair : report.pairs) {
    deviations += pair.width_negative <= pair.width_positive;
  }
  std::snprintf(buffer, sizeof(buffer),
                "q <= 20: %zu matched +-j pairs, negative wider in %lld, deviations %lld "
                "(logged, non-gating)",
                report.pairs.size(), static_cast<long long>(report.pairs_negative_wider),
                static_cast<long long>(deviations));
  return {true, false, buffer};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle-equivalence", criterion_oracle},
      {2, "count-recursion", criterion_recursion},
      {3, "range-law", criterion_range},
      {4, "conservation", criterion_conservation},
      {5, "q2-anchor", criterion_anchor},
      {6, "band-sweep-residual", criterion_band_sweep},
      {7, "band-nesting", criterion_nesting},
      {8, "gap-convergence", criterion_convergence},
      {9, "ids-identity", criterion_ids},
      {10, "butterfly-reproduction", criterion_butterfly},
      {11, "gap-width-diagnostic", criterion_width_observation},
  };

  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int gating_failures = 0;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, true, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d [%s] %s  (%s)\n", criterion.id, criterion.name,
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass && outcome.gating) ++gating_failures;
  }
  return gating_failures == 0 ? 0 : 1;
}
