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

#include "ratcf.hpp"

#include <charconv>

namespace kohmoto {

namespace {

std::int64_t parse_int64(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument(std::string("cannot parse ") + what + " from '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::reduced(Int128 num, Int128 den) {
  if (den < Int128(1)) throw InvalidArgument("rational denominator must be >= 1");
  if (num.is_negative()) throw InvalidArgument("rational numerator must be >= 0");
  if (num.is_zero()) return Rational(0, 1);
  Int128 g = Int128::gcd(num, den);
  return Rational(num / g, den / g);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw InvalidArgument("rational must have the form p/q, got '" + text + "'");
  }
  Int128 num(parse_int64(std::string_view(text).substr(0, slash), "numerator"));
  Int128 den(parse_int64(std::string_view(text).substr(slash + 1), "denominator"));
  if (den < Int128(1)) throw InvalidArgument("denominator must be >= 1 in '" + text + "'");
  if (num.is_negative()) throw InvalidArgument("numerator must be >= 0 in '" + text + "'");
  if (Int128::gcd(num, den) != Int128(1)) {
    throw InvalidArgument("rational '" + text + "' is not in lowest terms");
  }
  return Rational(num, den);
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> d) : digits(std::move(d)) {
  if (digits.empty()) throw InvalidArgument("continued fraction needs at least the digit a_0");
  if (digits[0] != 0) throw InvalidArgument("continued fraction must start with a_0 = 0");
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] < 1) {
      throw InvalidArgument("continued-fraction digit a_" + std::to_string(i) +
                            " must be >= 1");
    }
  }
}

ContinuedFraction ContinuedFraction::parse(const std::string& csv) {
  std::vector<std::int64_t> digits;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::size_t end = comma == std::string::npos ? csv.size() : comma;
    digits.push_back(parse_int64(std::string_view(csv).substr(start, end - start), "digit"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ContinuedFraction(std::move(digits));
}

ContinuedFraction ContinuedFraction::ones(int levels) {
  if (levels < 0) throw InvalidArgument("digit count must be >= 0");
  std::vector<std::int64_t> digits(static_cast<std::size_t>(levels) + 1, 1);
  digits[0] = 0;
  return ContinuedFraction(std::move(digits));
}

std::string ContinuedFraction::str() const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits[i]);
  }
  return out;
}

ContinuedFraction cf_expand(const Rational& x) {
  if (!(x.num() < x.den())) {
    throw InvalidArgument("cf_expand requires 0 <= x < 1, got " + x.str());
  }
  std::vector<std::int64_t> digits{0};
  // Euclidean algorithm on (num, den); the quotients are the digits. For a
  // reduced fraction this terminates with a final digit >= 2, which is the
  // canonical form among the two classical finite representations.
  Int128 num = x.num();
  Int128 den = x.den();
  while (!num.is_zero()) {
    Int128 a = den / num;
    digits.push_back(a.to_int64());
    Int128 r = den % num;
    den = num;
    num = r;
  }
  return ContinuedFraction(std::move(digits));
}

Rational cf_evaluate(const ContinuedFraction& cf) {
  // Fold 1/(a_i + .) from the last digit upward; exact at every step.
  Int128 num(0), den(1);
  for (std::size_t i = cf.digits.size(); i-- > 1;) {
    Int128 a(cf.digits[i]);
    Int128 new_den = a * den + num;
    num = den;
    den = new_den;
  }
  return Rational::reduced(num, den);
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, int up_to) {
  if (up_to < 0) throw InvalidArgument("convergent level must be >= 0");
  if (up_to >= cf.size()) {
    throw InvalidArgument("level " + std::to_string(up_to) + " needs " +
                          std::to_string(up_to + 1) + " digits, have " +
                          std::to_string(cf.size()));
  }
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(up_to) + 1);
  Int128 p_prev(1), q_prev(0);  // (p_{-1}, q_{-1})
  Int128 p(0), q(1);            // (p_0, q_0)
  out.push_back(Convergent{0, p, q});
  for (int k = 1; k <= up_to; ++k) {
    Int128 a(cf.digits[static_cast<std::size_t>(k)]);
    Int128 p_next = a * p + p_prev;
    Int128 q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.push_back(Convergent{k, p, q});
  }
  return out;
}

Int128 centered_mod(Int128 x, Int128 q) {
  if (q < Int128(1)) throw InvalidArgument("centered_mod requires q >= 1");
  // x - q*floor(x/q + 1/2), with the half integer folded into one floor
  // division: floor((2x + q) / (2q)).
  Int128 two(2);
  return x - q * Int128::floor_div(two * x + q, two * q);
}

}  // namespace kohmoto
