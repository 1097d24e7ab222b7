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

#include "spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kohmoto {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalues of the q x q Bloch boundary-value problem with wrap sign +1
// (periodic) or -1 (antiperiodic). For q = 1 the wrap couples the single site
// to itself from both sides, contributing 2*sign on the diagonal; for q = 2
// the wrap doubles (periodic) or cancels (antiperiodic) the hopping entry.
std::vector<double> bloch_eigenvalues(const KohmotoPotential& potential, double sign) {
  const std::int64_t q = potential.period();
  if (q == 1) {
    return {potential.values[0] + 2.0 * sign};
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(q, q);
  for (std::int64_t i = 0; i < q; ++i) h(i, i) = potential.values[static_cast<std::size_t>(i)];
  for (std::int64_t i = 0; i + 1 < q; ++i) {
    h(i, i + 1) += 1.0;
    h(i + 1, i) += 1.0;
  }
  h(0, q - 1) += sign;
  h(q - 1, 0) += sign;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ComputeError("eigen-solver failed for alpha = " + potential.alpha.str());
  }
  std::vector<double> out(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

Int128 gap_index_for(const KohmotoPotential& potential, std::int64_t n) {
  const Int128 q = potential.alpha.den();
  if (n <= 0 || Int128(n) >= q) return Int128(0);  // unbounded gaps carry index 0
  return solve_diophantine(Int128(n), potential.alpha.num(), q);
}

}  // namespace

KohmotoPotential potential_sequence(const Rational& alpha, double lambda) {
  if (alpha.num() > alpha.den()) {
    throw InvalidArgument("frequency must satisfy 0 <= alpha <= 1, got " + alpha.str());
  }
  if (!std::isfinite(lambda)) throw InvalidArgument("coupling must be finite");
  const std::int64_t q = alpha.den().to_int64();
  const std::int64_t p = alpha.num().to_int64();
  KohmotoPotential potential;
  potential.alpha = alpha;
  potential.lambda = lambda;
  potential.values.resize(static_cast<std::size_t>(q));
  for (std::int64_t n = 1; n <= q; ++n) {
    const std::int64_t rot = (n % q) * (p % q) % q;  // n*p mod q
    potential.values[static_cast<std::size_t>(n - 1)] = rot >= q - p ? lambda : 0.0;
  }
  return potential;
}

double discriminant(const KohmotoPotential& potential, double energy) {
  // Ordered product A(q)...A(1) of the one-step transfer matrices.
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  for (double v : potential.values) {
    const double t = energy - v;
    const double n00 = t * m00 - m10;
    const double n01 = t * m01 - m11;
    m10 = m00;
    m11 = m01;
    m00 = n00;
    m01 = n01;
  }
  return m00 + m11;
}

namespace {

struct Mat2 {
  long double a = 1, b = 0, c = 0, d = 1;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

// Discriminant and its energy derivative in extended precision. The
// derivative sums, over sites, the trace of the product with one factor
// differentiated; with prefix/suffix products that is one O(q) pass.
std::pair<long double, long double> discriminant_with_derivative(
    const KohmotoPotential& potential, long double energy) {
  const std::size_t q = potential.values.size();
  std::vector<Mat2> prefix(q + 1);  // prefix[n] = A(n)...A(1)
  for (std::size_t n = 0; n < q; ++n) {
    const long double t = energy - static_cast<long double>(potential.values[n]);
    prefix[n + 1] = Mat2{t, -1, 1, 0} * prefix[n];
  }
  Mat2 suffix;  // A(q)...A(n+1), built downward
  long double derivative = 0;
  for (std::size_t n = q; n-- > 0;) {
    // d/dE A(n) = (1 0; 0 0), so the summand is (prefix[n] * suffix)(0,0).
    derivative += (prefix[n] * suffix).a;
    const long double t = energy - static_cast<long double>(potential.values[n]);
    suffix = suffix * Mat2{t, -1, 1, 0};
  }
  const Mat2& full = prefix[q];
  return {full.a + full.d, derivative};
}

// Newton-refines an eigenvalue edge onto discriminant(E) = target. The
// eigen-solver locates the edge to ~1e-14; where bands are extremely thin the
// discriminant is so steep that this still leaves a visible residual, and the
// refinement removes it. A displacement guard keeps the two routes honest:
// the refined edge must stay within a hair of the eigenvalue, otherwise the
// eigenvalue wins and the residual stands.
double refine_edge(const KohmotoPotential& potential, double eigenvalue, double target) {
  const long double guard = 1e-7 * std::max(1.0, std::abs(eigenvalue));
  long double e = eigenvalue;
  for (int iter = 0; iter < 8; ++iter) {
    const auto [disc, slope] = discriminant_with_derivative(potential, e);
    if (std::abs(static_cast<double>(slope)) < 1e-3) break;  // band-edge tangency
    const long double step = (disc - static_cast<long double>(target)) / slope;
    e -= step;
    if (std::abs(static_cast<double>(step)) < 1e-18) break;
  }
  if (std::abs(e - static_cast<long double>(eigenvalue)) > guard) return eigenvalue;
  return static_cast<double>(e);
}

}  // namespace

Spectrum compute_spectrum(const KohmotoPotential& potential) {
  const std::int64_t q = potential.period();

  // 2q band edges: q periodic (discriminant = +2) and q antiperiodic (= -2).
  // Sorted together, consecutive pairs are the bands.
  struct Edge {
    double energy;
    double target;  // +2 or -2
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * q));
  for (double e : bloch_eigenvalues(potential, +1.0)) {
    edges.push_back({refine_edge(potential, e, +2.0), +2.0});
  }
  for (double e : bloch_eigenvalues(potential, -1.0)) {
    edges.push_back({refine_edge(potential, e, -2.0), -2.0});
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.energy < b.energy; });

  Spectrum spectrum;
  spectrum.potential = potential;
  spectrum.max_edge_residual = 0.0;
  for (const Edge& edge : edges) {
    const double residual = std::abs(discriminant(potential, edge.energy) - edge.target);
    spectrum.max_edge_residual = std::max(spectrum.max_edge_residual, residual);
  }

  spectrum.bands.reserve(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    BandInterval band;
    band.lo = edges[static_cast<std::size_t>(2 * i)].energy;
    band.hi = edges[static_cast<std::size_t>(2 * i + 1)].energy;
    band.ordinal = i + 1;
    spectrum.bands.push_back(band);
  }

  spectrum.gaps.reserve(static_cast<std::size_t>(q) + 1);
  for (std::int64_t n = 0; n <= q; ++n) {
    GapInterval gap;
    gap.number = n;
    gap.lo = n == 0 ? -kInf : spectrum.bands[static_cast<std::size_t>(n - 1)].hi;
    gap.hi = n == q ? kInf : spectrum.bands[static_cast<std::size_t>(n)].lo;
    gap.degenerate = n > 0 && n < q && gap.width() < kDegenerateGapWidth;
    gap.index = gap_index_for(potential, n);
    spectrum.gaps.push_back(gap);
  }
  return spectrum;
}

Rational ids_plateau(const Spectrum& spectrum, std::int64_t gap_number) {
  if (gap_number < 0 || gap_number > spectrum.period()) {
    throw InvalidArgument("gap number out of range for q = " + std::to_string(spectrum.period()));
  }
  return Rational::reduced(Int128(gap_number), Int128(spectrum.period()));
}

std::vector<Spectrum> level_spectra(const SpectralTree& tree, double lambda, int up_to) {
  if (up_to > tree.depth()) throw InvalidArgument("level spectra beyond built depth");
  std::vector<Spectrum> out;
  out.reserve(static_cast<std::size_t>(up_to) + 1);
  for (int k = 0; k <= up_to; ++k) {
    const Convergent& c = tree.convergent(k);
    out.push_back(compute_spectrum(potential_sequence(Rational::reduced(c.p, c.q), lambda)));
  }
  return out;
}

BandInterval band_for_vertex(const SpectralTree& tree, const std::vector<Spectrum>& spectra,
                             int level, std::int64_t pos) {
  if (level >= static_cast<int>(spectra.size())) {
    throw InvalidArgument("spectrum for level " + std::to_string(level) + " not computed");
  }
  const std::int64_t ordinal = tree.band_ordinal(level, pos);
  return spectra[static_cast<std::size_t>(level)].bands[static_cast<std::size_t>(ordinal)];
}

ConvergenceReport gap_convergence(const SpectralTree& tree, int level, std::int64_t pos,
                                  int depth, double lambda) {
  if (depth < 2) throw InvalidArgument("convergence report needs depth >= 2");
  const BoundaryPath path = boundary_path(tree, level, pos, level + depth);
  const bool rightmost = path.side == PathSide::RightMost;

  // Spectra of the even path levels k, k+2, ..., where the gaps live.
  std::vector<Spectrum> spectra;
  for (int m = 0; 2 * m <= depth; ++m) {
    const Convergent& c = tree.convergent(level + 2 * m);
    spectra.push_back(compute_spectrum(potential_sequence(Rational::reduced(c.p, c.q), lambda)));
  }

  ConvergenceReport report;
  report.side = path.side;
  report.origin_value = gap_index(tree, level, pos).value;

  for (int m = 0; 2 * m <= depth; ++m) {
    ConvergenceStep step;
    step.level = level + 2 * m;
    step.position = path.positions[static_cast<std::size_t>(2 * m)];
    const std::int64_t n = tree.gap_number(step.level, step.position);
    const Spectrum& level_spectrum = spectra[static_cast<std::size_t>(m)];
    step.gap = level_spectrum.gaps[static_cast<std::size_t>(n)];
    step.index_value = gap_index(tree, step.level, step.position).value;
    step.tracked_endpoint = rightmost ? step.gap.hi : step.gap.lo;

    // Companion band: the tracked-side neighbor at the same level. A bounded
    // gap is flanked by band vertices, so the neighbor always exists.
    step.band_position = rightmost ? step.position + 1 : step.position - 1;
    const std::int64_t ordinal = tree.band_ordinal(step.level, step.band_position);
    step.band = level_spectrum.bands[static_cast<std::size_t>(ordinal)];
    report.steps.push_back(step);
  }

  const double tol = 1e-9;
  report.widths_strictly_decreasing = true;
  report.bands_nested = true;
  report.endpoints_enter_bands = true;
  report.endpoint_steps_bounded = true;
  report.indices_conserved = true;
  for (std::size_t m = 0; m < report.steps.size(); ++m) {
    const ConvergenceStep& step = report.steps[m];
    if (step.index_value != report.origin_value) report.indices_conserved = false;
    if (m == 0) continue;
    const ConvergenceStep& prev = report.steps[m - 1];
    if (!(step.band.width() < prev.band.width())) report.widths_strictly_decreasing = false;
    if (step.band.lo < prev.band.lo - tol || step.band.hi > prev.band.hi + tol) {
      report.bands_nested = false;
    }
    if (!prev.band.contains(step.tracked_endpoint, tol)) report.endpoints_enter_bands = false;
    if (std::abs(step.tracked_endpoint - prev.tracked_endpoint) > prev.band.width() + tol) {
      report.endpoint_steps_bounded = false;
    }
  }
  return report;
}

}  // namespace kohmoto
