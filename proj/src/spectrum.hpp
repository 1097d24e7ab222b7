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
#include <vector>

#include "indexing.hpp"
#include "ratcf.hpp"
#include "tree.hpp"

namespace kohmoto {

/// Bounded gaps narrower than this are reported as degenerate (touching
/// bands); they are flagged, never merged, so the band count stays q.
inline constexpr double kDegenerateGapWidth = 1e-10;

/// Potential sequence V(1..q) of the q-periodic Hamiltonian
///     (H psi)(n) = psi(n+1) + psi(n-1) + V(n) psi(n),
/// where V(n) = lambda iff the rotation orbit point n*p/q mod 1 lands in
/// [1 - p/q, 1). Membership is decided in exact integer arithmetic:
/// n*p mod q >= q - p.
struct KohmotoPotential {
  Rational alpha;
  double lambda = 0.0;
  std::vector<double> values;  // values[i] = V(i+1)

  std::int64_t period() const { return static_cast<std::int64_t>(values.size()); }
};

/// Builds the potential for 0 <= alpha <= 1. The endpoints appear as tree
/// approximants (0/1 gives V == 0, 1/1 gives V == lambda); the spectrum CLI
/// restricts user input to the open interval.
KohmotoPotential potential_sequence(const Rational& alpha, double lambda);

/// Trace of the ordered product of the q one-step transfer matrices
/// ((E - V(n), -1), (1, 0)). The spectrum is {E : |discriminant| <= 2}; the
/// periodic (antiperiodic) eigenvalues are exactly the solutions of
/// discriminant = +2 (-2).
double discriminant(const KohmotoPotential& potential, double energy);

struct BandInterval {
  double lo = 0.0, hi = 0.0;
  std::int64_t ordinal = 0;  // 1..q in spectral order

  double width() const { return hi - lo; }
  bool contains(double e, double tol) const { return e >= lo - tol && e <= hi + tol; }
};

struct GapInterval {
  std::int64_t number = 0;   // n: count of bands strictly below; 0..q
  double lo = 0.0, hi = 0.0; // -+infinity for the two unbounded gaps
  bool degenerate = false;
  Int128 index{0};           // centered Diophantine index; 0 for unbounded gaps

  double width() const { return hi - lo; }
};

struct Spectrum {
  KohmotoPotential potential;
  std::vector<BandInterval> bands;  // exactly q, sorted, disjoint interiors
  std::vector<GapInterval> gaps;    // exactly q+1, including the unbounded pair
  double max_edge_residual = 0.0;   // max over edges of |discriminant -+ 2|

  const Rational& alpha() const { return potential.alpha; }
  std::int64_t period() const { return potential.period(); }
};

/// Band edges are the eigenvalues of the periodic and antiperiodic q x q
/// boundary-value problems (corner-coupled tridiagonal matrices); sorted and
/// paired they give the q bands. The discriminant residual at every edge is
/// kept as an independent consistency check.
Spectrum compute_spectrum(const KohmotoPotential& potential);

/// IDS plateau value on gap n: exactly n/q.
Rational ids_plateau(const Spectrum& spectrum, std::int64_t gap_number);

/// Spectra of the approximants alpha_0 .. alpha_up_to of a tree.
std::vector<Spectrum> level_spectra(const SpectralTree& tree, double lambda, int up_to);

/// The band interval represented by an A/B vertex: its ordinal among the band
/// vertices of the level selects the band of the level's spectrum.
BandInterval band_for_vertex(const SpectralTree& tree, const std::vector<Spectrum>& spectra,
                             int level, std::int64_t pos);

/// One step of the gap-convergence report along a boundary path. Step m holds
/// the gap of the path's G-vertex at level k+2m together with its companion
/// band: the band of the level-(k+2m) neighbor on the tracked side (the side
/// the path branches toward). The companions form a nested chain of bands
/// with strictly shrinking widths whose intersection is the limiting gap
/// edge; the tracked endpoint (right on right-most paths, left on left-most)
/// is an edge of its own companion, falls into the previous companion, and
/// moves by at most the previous companion's width per step.
struct ConvergenceStep {
  int level = 0;
  std::int64_t position = 0;
  GapInterval gap;
  Int128 index_value{0};
  double tracked_endpoint = 0.0;
  std::int64_t band_position = 0;
  BandInterval band;
};

struct ConvergenceReport {
  PathSide side = PathSide::RightMost;
  Int128 origin_value{0};
  std::vector<ConvergenceStep> steps;
  bool widths_strictly_decreasing = false;
  bool bands_nested = false;
  bool endpoints_enter_bands = false;
  bool endpoint_steps_bounded = false;
  bool indices_conserved = false;

  bool pass() const {
    return widths_strictly_decreasing && bands_nested && endpoints_enter_bands &&
           endpoint_steps_bounded && indices_conserved;
  }
};

/// Follows the boundary path from the G-vertex (level, pos) for `depth` more
/// levels and reports the gap intervals and companion band widths.
ConvergenceReport gap_convergence(const SpectralTree& tree, int level, std::int64_t pos,
                                  int depth, double lambda);

}  // namespace kohmoto
