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

#include "checked_int.hpp"

namespace kohmoto {

/// Non-negative rational number, always stored in lowest terms.
class Rational {
 public:
  /// Zero (0/1).
  Rational() : num_(0), den_(1) {}

  /// Reduces num/den to lowest terms. Requires num >= 0 and den >= 1.
  static Rational reduced(Int128 num, Int128 den);

  /// Parses "p/q". The input must already be in lowest terms; a non-reduced
  /// fraction such as "2/4" is rejected rather than silently reduced, so
  /// that command-line frequencies are unambiguous.
  static Rational parse(const std::string& text);

  const Int128& num() const { return num_; }
  const Int128& den() const { return den_; }

  std::string str() const { return num_.str() + "/" + den_.str(); }
  double to_double() const { return num_.to_double() / den_.to_double(); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  /// Exact order via cross multiplication.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  Rational(Int128 num, Int128 den) : num_(num), den_(den) {}
  Int128 num_, den_;
};

/// Continued-fraction digit sequence (a_0, a_1, ..., a_K) with a_0 = 0 and
/// a_n >= 1 for n >= 1. Finite prefixes of an (conceptually infinite) digit
/// sequence are what every consumer works with.
struct ContinuedFraction {
  std::vector<std::int64_t> digits;

  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<std::int64_t> d);

  /// Parses a comma-separated digit list, e.g. "0,3,2,1,2".
  static ContinuedFraction parse(const std::string& csv);

  /// The all-ones sequence (0, 1, 1, ...) with `levels` ones; its convergents
  /// are the Fibonacci ratios converging to (sqrt(5)-1)/2.
  static ContinuedFraction ones(int levels);

  /// Number of digit entries, counting a_0.
  int size() const { return static_cast<int>(digits.size()); }

  std::string str() const;
};

/// Convergent p_k/q_k of a continued fraction, with p_0/q_0 = 0/1.
struct Convergent {
  int level = 0;
  Int128 p{0};
  Int128 q{1};

  friend bool operator==(const Convergent& a, const Convergent& b) {
    return a.level == b.level && a.p == b.p && a.q == b.q;
  }
};

/// Expands a rational x in [0,1) into its canonical continued fraction
/// (final digit >= 2 whenever the expansion has more than one digit).
ContinuedFraction cf_expand(const Rational& x);

/// Evaluates a digit sequence back to an exact rational by folding from the
/// last digit. Independent of the convergent recurrence, which makes the two
/// routes cross-checkable.
Rational cf_evaluate(const ContinuedFraction& cf);

/// Convergents p_0/q_0 ... p_k/q_k via the three-term recurrence
/// p_k = a_k p_{k-1} + p_{k-2}, seeded with (p_{-1},q_{-1}) = (1,0).
std::vector<Convergent> convergents(const ContinuedFraction& cf, int up_to);

/// Centered modulo: the unique representative of x (mod q) in [-q/2, q/2).
/// The lower boundary -q/2 is attainable, +q/2 never is.
Int128 centered_mod(Int128 x, Int128 q);

}  // namespace kohmoto
