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

#include "gridmean/grid_stats.h"

#include <stdexcept>
#include <string>

namespace gridmean {

GridSpec::GridSpec(unsigned long n, unsigned long m) : n_(n), m_(m) {
  if (n == 0) throw std::invalid_argument("grid dimension n must be >= 1");
  if (m == 0) throw std::invalid_argument("grid subdivision m must be >= 1");
}

bool BoxShape::valid_for(const GridSpec& g) const {
  if (edges.size() != g.n()) return false;
  for (unsigned long j : edges) {
    if (j < 1 || j > g.m()) return false;
  }
  return true;
}

ScaledVolume::ScaledVolume(Rational ratio, Rational edge_scale, unsigned long dimension)
    : ratio_(std::move(ratio)), edge_scale_(std::move(edge_scale)), dimension_(dimension) {
  if (ratio_.sign() < 0) throw std::invalid_argument("volume ratio must be >= 0");
  if (edge_scale_.sign() <= 0) throw std::invalid_argument("edge length a must be > 0");
}

Rational ScaledVolume::volume() const { return ratio_ * pow(edge_scale_, dimension_); }

BigInt count_cuboids_by_shape(const GridSpec& g, const BoxShape& s) {
  if (!s.valid_for(g)) {
    throw std::invalid_argument("box shape does not fit grid (n=" + std::to_string(g.n()) +
                                ", m=" + std::to_string(g.m()) + ")");
  }
  BigInt count = 1;
  for (unsigned long j : s.edges) count *= g.m() + 1 - j;
  return count;
}

BigInt total_cuboids(const GridSpec& g) {
  const BigInt per_axis = BigInt(g.m()) * (g.m() + 1) / 2;
  return pow(per_axis, g.n());
}

BigInt count_cubes_by_edge(const GridSpec& g, unsigned long j) {
  if (j < 1 || j > g.m()) {
    throw std::out_of_range("cube edge " + std::to_string(j) + " outside 1.." +
                            std::to_string(g.m()));
  }
  return pow(BigInt(g.m() + 1 - j), g.n());
}

BigInt total_cubes(const GridSpec& g) { return sum_powers(g.m(), g.n()); }

Rational q_ratio_sum(const GridSpec& g) {
  const unsigned long m = g.m();
  BigInt weighted = 0;  // sum_i (m+1-i) * i
  BigInt count = 0;     // sum_i (m+1-i), which equals sum_i i
  for (unsigned long i = 1; i <= m; ++i) {
    weighted += BigInt(m + 1 - i) * i;
    count += m + 1 - i;
  }
  return Rational(pow(weighted, g.n()), pow(BigInt(m), g.n()) * pow(count, g.n()));
}

Rational q_ratio_closed(const GridSpec& g) {
  return Rational(pow(BigInt(g.m() + 2), g.n()), pow(BigInt(3 * g.m()), g.n()));
}

Rational q_limit(unsigned long n) { return Rational(BigInt(1), pow(BigInt(3), n)); }

Rational r_ratio_sum(const GridSpec& g) {
  const unsigned long n = g.n();
  const unsigned long m = g.m();
  BigInt weighted = 0;
  BigInt count = 0;
  for (unsigned long j = 1; j <= m; ++j) {
    const BigInt placements = pow(BigInt(m + 1 - j), n);
    weighted += placements * pow(BigInt(j), n);
    count += placements;
  }
  return Rational(weighted, pow(BigInt(m), n) * count);
}

Rational r_ratio_binomial(const GridSpec& g) {
  const unsigned long n = g.n();
  const unsigned long m = g.m();
  BigInt numerator = 0;
  for (unsigned long i = 0; i <= n; ++i) {
    BigInt term = binomial(n, i) * pow(BigInt(m + 1), n - i) * sum_powers(m, n + i);
    if (i % 2 == 0) {
      numerator += term;
    } else {
      numerator -= term;
    }
  }
  return Rational(numerator, pow(BigInt(m), n) * sum_powers(m, n));
}

Rational r_limit(unsigned long n) { return Rational(BigInt(1), binomial(2 * n + 1, n)); }

RootBound edge_ratio_bounds(unsigned long n, unsigned long digits) {
  if (n == 0) throw std::invalid_argument("edge ratio needs n >= 1");
  return nth_root_bounds(r_limit(n), n, digits);
}

ScaledVolume scale_volume(const Rational& ratio, const Rational& a, unsigned long n) {
  if (n == 0) throw std::invalid_argument("dimension n must be >= 1");
  return ScaledVolume(ratio, a, n);
}

}  // namespace gridmean
