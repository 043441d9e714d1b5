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

#include <span>
#include <variant>
#include <vector>

#include "gridmean/exact.h"

namespace gridmean {

/// One row of a convergence table: a value at some index (m or n), the
/// limit it approaches, and the distance between them.
///
/// For exact values gap_lo == gap_hi == |value - limit|. For enclosures the
/// distance is only known to lie in [gap_lo, gap_hi]; gap_lo > 0 certifies
/// that the value differs from the limit.
struct ConvergenceRow {
  unsigned long index = 0;
  std::variant<Rational, RootBound> value;
  Rational limit;
  Rational gap_lo;
  Rational gap_hi;

  bool is_enclosure() const { return std::holds_alternative<RootBound>(value); }
  /// The exact value, or the lower end of the enclosure.
  const Rational& lower_value() const;
  /// The exact value, or the upper end of the enclosure.
  const Rational& upper_value() const;
};

ConvergenceRow make_row(unsigned long index, Rational value, Rational limit);
ConvergenceRow make_row(unsigned long index, RootBound value, Rational limit);

/// q_n(m) for each m, against 1/3^n.
std::vector<ConvergenceRow> cuboid_convergence(unsigned long n, std::span<const unsigned long> ms,
                                               unsigned jobs = 1);

/// r_n(m) for each m, against 1/C(2n+1, n).
std::vector<ConvergenceRow> cube_convergence(unsigned long n, std::span<const unsigned long> ms,
                                             unsigned jobs = 1);

/// Enclosures of r_n^(1/n) for each n, against 1/4.
std::vector<ConvergenceRow> edge_ratio_convergence(std::span<const unsigned long> ns,
                                                   unsigned long digits, unsigned jobs = 1);

}  // namespace gridmean
