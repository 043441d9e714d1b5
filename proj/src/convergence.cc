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

#include "gridmean/convergence.h"

#include <algorithm>
#include <stdexcept>

#include "gridmean/grid_stats.h"
#include "gridmean/parallel.h"

namespace gridmean {

const Rational& ConvergenceRow::lower_value() const {
  if (const auto* exact = std::get_if<Rational>(&value)) return *exact;
  return std::get<RootBound>(value).lo;
}

const Rational& ConvergenceRow::upper_value() const {
  if (const auto* exact = std::get_if<Rational>(&value)) return *exact;
  return std::get<RootBound>(value).hi;
}

ConvergenceRow make_row(unsigned long index, Rational value, Rational limit) {
  ConvergenceRow row;
  row.index = index;
  row.gap_lo = abs(value - limit);
  row.gap_hi = row.gap_lo;
  row.value = std::move(value);
  row.limit = std::move(limit);
  return row;
}

ConvergenceRow make_row(unsigned long index, RootBound value, Rational limit) {
  ConvergenceRow row;
  row.index = index;
  if (limit <= value.lo) {
    row.gap_lo = value.lo - limit;
    row.gap_hi = value.hi - limit;
  } else if (limit >= value.hi) {
    row.gap_lo = limit - value.hi;
    row.gap_hi = limit - value.lo;
  } else {
    // Limit inside the enclosure: no certified sign.
    row.gap_lo = Rational();
    row.gap_hi = std::max(limit - value.lo, value.hi - limit);
  }
  row.value = std::move(value);
  row.limit = std::move(limit);
  return row;
}

std::vector<ConvergenceRow> cuboid_convergence(unsigned long n, std::span<const unsigned long> ms,
                                               unsigned jobs) {
  return parallel_map<ConvergenceRow>(ms.size(), jobs, [&](std::size_t i) {
    return make_row(ms[i], q_ratio_closed(GridSpec(n, ms[i])), q_limit(n));
  });
}

std::vector<ConvergenceRow> cube_convergence(unsigned long n, std::span<const unsigned long> ms,
                                             unsigned jobs) {
  return parallel_map<ConvergenceRow>(ms.size(), jobs, [&](std::size_t i) {
    return make_row(ms[i], r_ratio_sum(GridSpec(n, ms[i])), r_limit(n));
  });
}

std::vector<ConvergenceRow> edge_ratio_convergence(std::span<const unsigned long> ns,
                                                   unsigned long digits, unsigned jobs) {
  for (unsigned long n : ns) {
    if (n == 0) throw std::invalid_argument("edge ratio needs n >= 1");
  }
  return parallel_map<ConvergenceRow>(ns.size(), jobs, [&](std::size_t i) {
    return make_row(ns[i], edge_ratio_bounds(ns[i], digits), Rational(1, 4));
  });
}

}  // namespace gridmean
