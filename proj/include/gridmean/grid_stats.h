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

// Mean-volume statistics of grid-aligned boxes in the unit hypercube [0,1]^n
// whose edges are cut into m equal segments.
//
//   q_n(m): mean volume over all boxes (hypercuboids), limit 1/3^n
//   r_n(m): mean volume over all cubes,                limit 1/C(2n+1, n)

#include <cstdint>
#include <vector>

#include "gridmean/exact.h"

namespace gridmean {

/// Dimension n and per-edge subdivision count m, both >= 1.
class GridSpec {
 public:
  /// Throws std::invalid_argument when n or m is zero.
  GridSpec(unsigned long n, unsigned long m);

  unsigned long n() const { return n_; }
  unsigned long m() const { return m_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  unsigned long n_;
  unsigned long m_;
};

/// Edge lengths j_1..j_n of a box, in grid units.
struct BoxShape {
  std::vector<unsigned long> edges;

  /// Arity n and 1 <= j_i <= m.
  bool valid_for(const GridSpec& g) const;
};

/// A dimensionless volume ratio attached to a concrete edge length a.
class ScaledVolume {
 public:
  /// Throws std::invalid_argument for negative ratio or non-positive edge.
  ScaledVolume(Rational ratio, Rational edge_scale, unsigned long dimension);

  const Rational& ratio() const { return ratio_; }
  const Rational& edge_scale() const { return edge_scale_; }
  unsigned long dimension() const { return dimension_; }

  /// ratio * a^n
  Rational volume() const;

 private:
  Rational ratio_;
  Rational edge_scale_;
  unsigned long dimension_;
};

/// Placements of a box with the given shape: prod (m + 1 - j_i).
/// Throws std::invalid_argument on a shape/grid mismatch.
BigInt count_cuboids_by_shape(const GridSpec& g, const BoxShape& s);

/// (m(m+1)/2)^n
BigInt total_cuboids(const GridSpec& g);

/// Placements of a cube of edge j: (m + 1 - j)^n.
/// Throws std::out_of_range unless 1 <= j <= m.
BigInt count_cubes_by_edge(const GridSpec& g, unsigned long j);

/// sum_j (m + 1 - j)^n, i.e. sum_powers(m, n).
BigInt total_cubes(const GridSpec& g);

/// q_n(m) as a ratio of sums. The n-fold sum factors into per-axis sums:
/// (sum_i (m+1-i) i)^n / (m^n (sum_i i)^n).
Rational q_ratio_sum(const GridSpec& g);

/// q_n(m) = (m+2)^n / (3m)^n.
Rational q_ratio_closed(const GridSpec& g);

/// 1 / 3^n. n = 0 gives 1.
Rational q_limit(unsigned long n);

/// r_n(m) = sum_j (m+1-j)^n (j/m)^n / sum_j (m+1-j)^n.
Rational r_ratio_sum(const GridSpec& g);

/// r_n(m) through the binomial expansion of (m+1-j)^n:
///   sum_i (-1)^i C(n,i) (m+1)^(n-i) S(m, n+i) / (m^n S(m, n))
/// with S(m, k) = sum_{j<=m} j^k. Deliberately unsimplified; it is a second
/// route to r_ratio_sum.
Rational r_ratio_binomial(const GridSpec& g);

/// 1 / C(2n+1, n).
Rational r_limit(unsigned long n);

/// Enclosure of r_n^(1/n), the edge ratio of a mean-volume cube.
RootBound edge_ratio_bounds(unsigned long n, unsigned long digits);

ScaledVolume scale_volume(const Rational& ratio, const Rational& a, unsigned long n);

}  // namespace gridmean
