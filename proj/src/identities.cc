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

#include "gridmean/identities.h"

#include <stdexcept>

#include "gridmean/parallel.h"

namespace gridmean {

VerificationReport make_report(long case_index, Rational lhs, Relation relation, Rational rhs) {
  VerificationReport r;
  r.case_index = case_index;
  r.relation = relation;
  r.passed = relation == Relation::equal ? lhs == rhs : lhs <= rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

Rational alternating_sum(unsigned long n) {
  BigInt common = 1;
  for (unsigned long d = n + 1; d <= 2 * n + 1; ++d) {
    mpz_lcm_ui(common.get_mpz_t(), common.get_mpz_t(), d);
  }

  BigInt numerator = 0;
  BigInt choose = 1;  // C(n, i)
  BigInt share;
  for (unsigned long i = 0; i <= n; ++i) {
    mpz_divexact_ui(share.get_mpz_t(), common.get_mpz_t(), n + 1 + i);
    if (i % 2 == 0) {
      numerator += choose * share;
    } else {
      numerator -= choose * share;
    }
    choose *= n - i;
    mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), i + 1);
  }
  return Rational(numerator, common);
}

Rational prop1_rhs(unsigned long n) {
  return Rational(BigInt(1), (n + 1) * binomial(2 * n + 1, n));
}

DensePolynomial expand_xn_times_1px_n(unsigned long n) {
  const DensePolynomial one_plus_x({Rational(1), Rational(1)});
  DensePolynomial p = DensePolynomial::monomial(Rational(1), n);
  for (unsigned long k = 0; k < n; ++k) p = p * one_plus_x;
  return p;
}

Rational beta_integral_exact(unsigned long n) {
  return integrate_definite(expand_xn_times_1px_n(n), Rational(-1), Rational(0));
}

VerificationReport beta_factorial_identity_check(unsigned long n) {
  const BigInt nf = factorial(n);
  BigInt lhs = nf * nf * (n + 1) * binomial(2 * n + 1, n);
  return make_report(static_cast<long>(n), Rational(std::move(lhs)), Relation::equal,
                     Rational(factorial(2 * n + 1)));
}

std::pair<VerificationReport, VerificationReport> central_binomial_bounds_check(unsigned long n) {
  const BigInt four_n = pow(BigInt(4), n);
  const BigInt central = binomial(2 * n, n);
  const long idx = static_cast<long>(n);
  return {make_report(idx, Rational(four_n), Relation::less_equal,
                      Rational(BigInt((2 * n + 1) * central))),
          make_report(idx, Rational(central), Relation::less_equal, Rational(four_n))};
}

VerificationReport binom_ratio_identity_check(unsigned long n) {
  BigInt lhs = (n + 1) * binomial(2 * n + 1, n);
  BigInt rhs = (2 * n + 1) * binomial(2 * n, n);
  return make_report(static_cast<long>(n), Rational(std::move(lhs)), Relation::equal,
                     Rational(std::move(rhs)));
}

BigInt central_binomial(unsigned long n, CentralBinomial which) {
  return which == CentralBinomial::even ? binomial(2 * n, n) : binomial(2 * n + 1, n);
}

std::vector<ConvergenceRow> nth_root_convergence(std::span<const unsigned long> ns,
                                                 unsigned long digits, CentralBinomial which,
                                                 unsigned jobs) {
  for (unsigned long n : ns) {
    if (n == 0) throw std::invalid_argument("n-th root table needs n >= 1");
  }
  return parallel_map<ConvergenceRow>(ns.size(), jobs, [&](std::size_t i) {
    const unsigned long n = ns[i];
    return make_row(n, nth_root_bounds(Rational(central_binomial(n, which)), n, digits),
                    Rational(4));
  });
}

}  // namespace gridmean
