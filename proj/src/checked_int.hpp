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
#include <limits>
#include <string>

#include "errors.hpp"

namespace kohmoto {

/// Signed 128-bit integer with overflow-checked arithmetic.
///
/// Denominators of continued-fraction convergents grow geometrically with the
/// digit values, so 64 bits run out around depth 25 even for modest digits.
/// 128 bits cover every tree the rest of the toolkit can materialize; any
/// operation that would wrap throws OverflowError instead of producing a
/// silently wrong exact value.
class Int128 {
 public:
  constexpr Int128() noexcept : v_(0) {}
  constexpr Int128(int v) noexcept : v_(v) {}
  constexpr Int128(long v) noexcept : v_(v) {}
  constexpr Int128(long long v) noexcept : v_(v) {}
  constexpr Int128(unsigned v) noexcept : v_(v) {}

  friend Int128 operator+(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
    return raw(r);
  }
  friend Int128 operator-(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
    return raw(r);
  }
  friend Int128 operator*(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
    return raw(r);
  }
  /// Truncating division, as for built-in integers.
  friend Int128 operator/(Int128 a, Int128 b) {
    check_divisor(a, b);
    return raw(a.v_ / b.v_);
  }
  friend Int128 operator%(Int128 a, Int128 b) {
    check_divisor(a, b);
    return raw(a.v_ % b.v_);
  }
  Int128 operator-() const {
    if (v_ == min_value()) overflow("negation");
    return raw(-v_);
  }

  Int128& operator+=(Int128 b) { return *this = *this + b; }
  Int128& operator-=(Int128 b) { return *this = *this - b; }
  Int128& operator*=(Int128 b) { return *this = *this * b; }

  friend bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
  friend bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
  friend bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
  friend bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
  friend bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }

  /// Floor division; the divisor must be positive.
  static Int128 floor_div(Int128 a, Int128 b) {
    if (b.v_ <= 0) throw InvalidArgument("floor_div: divisor must be positive");
    __int128 q = a.v_ / b.v_;
    if (a.v_ % b.v_ != 0 && a.v_ < 0) --q;
    return raw(q);
  }

  static Int128 gcd(Int128 a, Int128 b) {
    __int128 x = a.v_ < 0 ? -a.v_ : a.v_;
    __int128 y = b.v_ < 0 ? -b.v_ : b.v_;
    while (y != 0) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return raw(x);
  }

  bool fits_int64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() &&
           v_ <= std::numeric_limits<std::int64_t>::max();
  }
  std::int64_t to_int64() const {
    if (!fits_int64()) overflow("conversion to 64-bit");
    return static_cast<std::int64_t>(v_);
  }
  double to_double() const { return static_cast<double>(v_); }

  std::string str() const {
    if (v_ == 0) return "0";
    __int128 v = v_;
    bool neg = v < 0;
    std::string digits;
    while (v != 0) {
      int d = static_cast<int>(v % 10);
      if (d < 0) d = -d;
      digits.push_back(static_cast<char>('0' + d));
      v /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
  }

 private:
  static constexpr __int128 min_value() {
    return static_cast<__int128>(1) << 126 << 1;  // -2^127
  }
  static Int128 raw(__int128 v) {
    Int128 r;
    r.v_ = v;
    return r;
  }
  [[noreturn]] static void overflow(const char* op) {
    throw OverflowError(std::string("128-bit integer overflow in ") + op);
  }
  static void check_divisor(Int128 a, Int128 b) {
    if (b.v_ == 0) throw InvalidArgument("division by zero");
    if (a.v_ == min_value() && b.v_ == -1) overflow("division");
  }

  __int128 v_;
};

}  // namespace kohmoto
