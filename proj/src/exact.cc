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

#include "gridmean/exact.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace gridmean {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  }
  return BigInt(std::string(s), 10);
}

// A starting point for Newton's iteration, accurate to roughly the precision
// of a double. Any positive value works; a good one saves iterations.
BigInt root_estimate(const BigInt& x, unsigned long degree) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  const double log2_root = (std::log2(mantissa) + static_cast<double>(exponent)) /
                           static_cast<double>(degree);
  if (log2_root < 60.0) {
    return BigInt(static_cast<unsigned long>(std::ceil(std::exp2(log2_root)))) + 1;
  }
  const auto whole = static_cast<unsigned long>(std::floor(log2_root));
  const double frac = log2_root - static_cast<double>(whole);
  BigInt y(static_cast<unsigned long>(std::ldexp(std::exp2(frac), 52)));
  y <<= whole - 52;
  return y;
}

// lo * (lo+1) * ... * hi by balanced splitting, so the large multiplications
// are between operands of similar size.
BigInt range_product(unsigned long lo, unsigned long hi) {
  if (hi - lo < 16) {
    BigInt out = lo;
    for (unsigned long i = lo + 1; i <= hi; ++i) out *= i;
    return out;
  }
  const unsigned long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

// floor(((degree - 1) * y + x / y^(degree - 1)) / degree)
BigInt newton_step(const BigInt& x, const BigInt& y, unsigned long degree) {
  BigInt next = x / pow(y, degree - 1);
  next += (degree - 1) * y;
  next /= degree;
  return next;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), std::move(den));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  // Copy first: rhs may alias *this.
  const BigInt rn = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rn;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned long e) {
  return Rational(pow(r.numerator(), e), pow(r.denominator(), e));
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  if (k == 0) return 1;
  BigInt out = range_product(n - k + 1, n);
  const BigInt k_factorial = range_product(1, k);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), k_factorial.get_mpz_t());
  return out;
}

BigInt factorial(unsigned long n) { return n < 2 ? BigInt(1) : range_product(2, n); }

BigInt sum_powers(unsigned long m, unsigned long k) {
  if (m == 0) throw std::invalid_argument("sum_powers requires m >= 1");
  BigInt total = 0;
  BigInt term;
  for (unsigned long i = 1; i <= m; ++i) {
    mpz_ui_pow_ui(term.get_mpz_t(), i, k);
    total += term;
  }
  return total;
}

BigInt integer_root_floor(const BigInt& x, unsigned long degree) {
  if (degree == 0) throw std::invalid_argument("root degree must be >= 1");
  if (x < 0) throw std::domain_error("integer root of a negative number");
  if (degree == 1 || x < 2) return x;

  // One Newton step from any positive start lands at or above the floor root
  // (AM-GM); from there the iteration decreases monotonically onto it.
  BigInt y = newton_step(x, root_estimate(x, degree), degree);
  if (y == 0) y = 1;
  for (;;) {
    BigInt next = newton_step(x, y, degree);
    if (next >= y) break;
    y = std::move(next);
  }
  while (pow(y, degree) > x) --y;
  while (pow(y + 1, degree) <= x) ++y;
  return y;
}

BigInt pow10(unsigned long digits) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, digits);
  return out;
}

RootBound nth_root_bounds(const Rational& q, unsigned long degree, unsigned long digits) {
  if (q.sign() < 0) throw std::domain_error("root of a negative rational");
  if (degree == 0) throw std::invalid_argument("root degree must be >= 1");
  if (digits == 0) throw std::invalid_argument("digits must be >= 1");

  RootBound out;
  out.root_degree = degree;
  out.requested_digits = digits;

  const BigInt root_num = integer_root_floor(q.numerator(), degree);
  const BigInt root_den = integer_root_floor(q.denominator(), degree);
  if (pow(root_num, degree) == q.numerator() && pow(root_den, degree) == q.denominator()) {
    out.lo = out.hi = Rational(root_num, root_den);
    return out;
  }

  // r = floor((num * S^degree / den)^(1/degree)) gives r/S <= q^(1/degree) < (r+1)/S.
  const BigInt scale = pow10(digits);
  const BigInt scaled = q.numerator() * pow(scale, degree) / q.denominator();
  const BigInt r = integer_root_floor(scaled, degree);
  out.lo = Rational(r, scale);
  out.hi = Rational(r + 1, scale);
  return out;
}

bool encloses(const RootBound& bound, const Rational& q) {
  return bound.lo.sign() >= 0 && bound.lo <= bound.hi &&
         pow(bound.lo, bound.root_degree) <= q && q <= pow(bound.hi, bound.root_degree);
}

std::string to_decimal(const Rational& r, unsigned long digits) {
  BigInt scaled = abs(r.numerator()) * pow10(digits);
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
              r.denominator().get_mpz_t());
  const int tie = cmp(2 * remainder, r.denominator());
  if (tie > 0 || (tie == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;

  std::string body = quotient.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, 1, '.');
  if (r.sign() < 0 && quotient != 0) body.insert(0, 1, '-');
  return body;
}

}  // namespace gridmean
