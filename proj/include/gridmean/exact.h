// Copyright 2026 The gridmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file exact.h
 * @brief Exact integer/rational arithmetic and combinatorial primitives.
 *
 * BigInt is GMP's mpz_class. Rational is a canonical fraction:
 * - denominator always positive (sign carried by numerator)
 * - numerator and denominator coprime after every operation
 * - zero is 0/1
 * so two Rationals are equal exactly when their fields are equal.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gridmean {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  /// Throws std::domain_error on a zero denominator.
  Rational(BigInt num, BigInt den);

  /// Parses "p" or "p/q" (decimal integers, optional leading '-').
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// r^e for e >= 0 (0^0 = 1).
Rational pow(const Rational& r, unsigned long e);

BigInt pow(const BigInt& base, unsigned long e);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

/// Sum of i^k for i = 1..m by direct summation. Requires m >= 1.
BigInt sum_powers(unsigned long m, unsigned long k);

/// Largest r >= 0 with r^degree <= x. Requires x >= 0 and degree >= 1.
BigInt integer_root_floor(const BigInt& x, unsigned long degree);

/// Rational enclosure [lo, hi] of value^(1/degree).
struct RootBound {
  Rational lo;
  Rational hi;
  unsigned long root_degree = 1;
  unsigned long requested_digits = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Encloses q^(1/degree) with hi - lo <= 10^-digits. When q is the
/// degree-th power of a rational the enclosure collapses to that rational.
/// Throws std::domain_error for negative q, std::invalid_argument for a
/// zero degree or zero digits.
RootBound nth_root_bounds(const Rational& q, unsigned long degree,
                          unsigned long digits);

/// Exact check of lo^degree <= q <= hi^degree.
bool encloses(const RootBound& bound, const Rational& q);

/// 10^digits.
BigInt pow10(unsigned long digits);

/// Fixed-point decimal rendering with exactly `digits` fractional digits,
/// rounded half to even.
std::string to_decimal(const Rational& r, unsigned long digits);

}  // namespace gridmean
