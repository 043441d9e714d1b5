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

// Exact checks of the identities behind the limits of r_n(m):
//
//   sum_{i=0..n} (-1)^i C(n,i) / (n+1+i) = 1 / ((n+1) C(2n+1, n))
//   integral_{-1}^{0} x^n (1+x)^n dx    = (-1)^n / ((n+1) C(2n+1, n))
//   4^n / (2n+1) <= C(2n, n) <= 4^n
//   (n+1) C(2n+1, n) = (2n+1) C(2n, n)
//
// plus enclosures of the n-th roots of C(2n, n) and C(2n+1, n), which
// approach 4.

#include <span>
#include <utility>
#include <vector>

#include "gridmean/convergence.h"
#include "gridmean/exact.h"
#include "gridmean/polynomial.h"

namespace gridmean {

enum class Relation { equal, less_equal };

/// Outcome of one exact check `lhs <relation> rhs`; passed is computed from
/// the values, never set independently.
struct VerificationReport {
  long case_index = 0;
  Relation relation = Relation::equal;
  bool passed = false;
  Rational lhs;
  Rational rhs;
};

VerificationReport make_report(long case_index, Rational lhs, Relation relation, Rational rhs);

/// sum_{i=0..n} (-1)^i C(n,i) / (n+1+i), accumulated over the common
/// denominator lcm(n+1, ..., 2n+1).
Rational alternating_sum(unsigned long n);

/// 1 / ((n+1) C(2n+1, n))
Rational prop1_rhs(unsigned long n);

/// x^n (1+x)^n, built by repeated polynomial multiplication.
DensePolynomial expand_xn_times_1px_n(unsigned long n);

/// Integral of x^n (1+x)^n over [-1, 0], by exact term-wise integration.
Rational beta_integral_exact(unsigned long n);

/// Integer form of the Beta value at (n+1, n+1):
/// n! n! (n+1) C(2n+1, n) = (2n+1)!.
VerificationReport beta_factorial_identity_check(unsigned long n);

/// {4^n <= (2n+1) C(2n,n), C(2n,n) <= 4^n}.
std::pair<VerificationReport, VerificationReport> central_binomial_bounds_check(unsigned long n);

/// (n+1) C(2n+1, n) = (2n+1) C(2n, n).
VerificationReport binom_ratio_identity_check(unsigned long n);

enum class CentralBinomial {
  even,  // C(2n, n)
  odd,   // C(2n+1, n)
};

BigInt central_binomial(unsigned long n, CentralBinomial which);

/// Enclosure of C(2n,n)^(1/n) or C(2n+1,n)^(1/n) for each n, with the
/// distance below the limit 4.
std::vector<ConvergenceRow> nth_root_convergence(std::span<const unsigned long> ns,
                                                 unsigned long digits, CentralBinomial which,
                                                 unsigned jobs = 1);

}  // namespace gridmean
