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

#include <cstddef>
#include <vector>

#include "gridmean/exact.h"

namespace gridmean {

/// Univariate polynomial with rational coefficients; coefficient i belongs
/// to x^i. The highest stored coefficient is nonzero, so the zero
/// polynomial has no coefficients at all.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Rational> coefficients);

  /// c * x^power
  static DensePolynomial monomial(Rational c, std::size_t power);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero for powers beyond the degree.
  Rational coefficient(std::size_t power) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Horner evaluation.
  Rational evaluate(const Rational& x) const;

  /// The antiderivative with zero constant term.
  DensePolynomial antiderivative() const;

  DensePolynomial& operator+=(const DensePolynomial& rhs);
  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Exact value of the integral of p over [lower, upper].
Rational integrate_definite(const DensePolynomial& p, const Rational& lower,
                            const Rational& upper);

}  // namespace gridmean
