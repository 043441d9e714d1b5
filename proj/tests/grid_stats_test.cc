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

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace gridmean {
namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

// Mean area of all axis-aligned rectangles / squares in an m x m grid of
// the unit square, by four nested loops over corner coordinates.
Rational rectangle_mean_2d(unsigned long m, bool squares_only) {
  BigInt area_sum = 0;
  BigInt count = 0;
  for (unsigned long x0 = 0; x0 <= m; ++x0)
    for (unsigned long x1 = x0 + 1; x1 <= m; ++x1)
      for (unsigned long y0 = 0; y0 <= m; ++y0)
        for (unsigned long y1 = y0 + 1; y1 <= m; ++y1) {
          if (squares_only && x1 - x0 != y1 - y0) continue;
          area_sum += (x1 - x0) * (y1 - y0);
          ++count;
        }
  return Rational(area_sum, count * m * m);
}

TEST(GridSpecTest, RejectsZero) {
  EXPECT_THROW(GridSpec(0, 3), std::invalid_argument);
  EXPECT_THROW(GridSpec(2, 0), std::invalid_argument);
  EXPECT_NO_THROW(GridSpec(1, 1));
}

TEST(CountTest, CuboidsByShape) {
  EXPECT_EQ(count_cuboids_by_shape(GridSpec(2, 3), {{1, 2}}), 6);
  EXPECT_EQ(count_cuboids_by_shape(GridSpec(1, 1), {{1}}), 1);
  EXPECT_EQ(count_cuboids_by_shape(GridSpec(3, 2), {{2, 2, 2}}), 1);
}

TEST(CountTest, CuboidShapeMismatch) {
  EXPECT_THROW(count_cuboids_by_shape(GridSpec(2, 3), {{1}}), std::invalid_argument);
  EXPECT_THROW(count_cuboids_by_shape(GridSpec(2, 3), {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(count_cuboids_by_shape(GridSpec(2, 3), {{0, 1}}), std::invalid_argument);
}

TEST(CountTest, Totals) {
  EXPECT_EQ(total_cuboids(GridSpec(2, 2)), 9);
  EXPECT_EQ(total_cuboids(GridSpec(1, 1)), 1);
  EXPECT_EQ(total_cuboids(GridSpec(3, 3)), 216);
  EXPECT_EQ(total_cubes(GridSpec(2, 2)), 5);
  EXPECT_EQ(total_cubes(GridSpec(1, 4)), 10);
  EXPECT_EQ(total_cubes(GridSpec(5, 1)), 1);
}

TEST(CountTest, CubesByEdge) {
  EXPECT_EQ(count_cubes_by_edge(GridSpec(2, 3), 2), 4);
  EXPECT_EQ(count_cubes_by_edge(GridSpec(2, 3), 3), 1);
  EXPECT_EQ(count_cubes_by_edge(GridSpec(3, 2), 1), 8);
  EXPECT_THROW(count_cubes_by_edge(GridSpec(2, 3), 0), std::out_of_range);
  EXPECT_THROW(count_cubes_by_edge(GridSpec(2, 3), 4), std::out_of_range);
}

TEST(CountTest, ShapeTotalsMatchClosedForms) {
  for (unsigned long n = 1; n <= 4; ++n) {
    for (unsigned long m = 1; m <= 8; ++m) {
      const GridSpec g(n, m);
      BigInt cuboids = 0;
      BoxShape s{std::vector<unsigned long>(n, 1)};
      for (;;) {
        cuboids += count_cuboids_by_shape(g, s);
        std::size_t i = 0;
        while (i < n && ++s.edges[i] > m) s.edges[i++] = 1;
        if (i == n) break;
      }
      EXPECT_EQ(cuboids, total_cuboids(g)) << "n=" << n << " m=" << m;

      BigInt cubes = 0;
      for (unsigned long j = 1; j <= m; ++j) cubes += count_cubes_by_edge(g, j);
      EXPECT_EQ(cubes, total_cubes(g)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(QRatioTest, Examples) {
  EXPECT_EQ(q_ratio_sum(GridSpec(1, 2)), frac(2, 3));
  EXPECT_EQ(q_ratio_sum(GridSpec(2, 1)), Rational(1));
  EXPECT_EQ(q_ratio_sum(GridSpec(2, 2)), frac(4, 9));
  EXPECT_EQ(q_ratio_closed(GridSpec(2, 2)), frac(4, 9));
  EXPECT_EQ(q_ratio_closed(GridSpec(3, 1)), Rational(1));
  EXPECT_EQ(q_ratio_closed(GridSpec(1, 4)), frac(1, 2));
}

TEST(QRatioTest, TwoDimensionalBruteForce) {
  for (unsigned long m = 1; m <= 7; ++m) {
    EXPECT_EQ(q_ratio_sum(GridSpec(2, m)), rectangle_mean_2d(m, false)) << "m=" << m;
  }
}

TEST(QRatioTest, SumEqualsClosedForm) {
  for (unsigned long n = 1; n <= 4; ++n)
    for (unsigned long m = 1; m <= 8; ++m)
      EXPECT_EQ(q_ratio_sum(GridSpec(n, m)), q_ratio_closed(GridSpec(n, m)));
}

TEST(QRatioTest, IntegerIdentity) {
  for (unsigned long n = 1; n <= 6; ++n) {
    for (unsigned long m = 1; m <= 50; ++m) {
      const Rational scaled = q_ratio_closed(GridSpec(n, m)) * Rational(pow(BigInt(3 * m), n));
      EXPECT_EQ(scaled, Rational(pow(BigInt(m + 2), n)));
    }
  }
}

TEST(QRatioTest, DecreasesInMFromOne) {
  for (unsigned long n = 1; n <= 6; ++n) {
    EXPECT_EQ(q_ratio_closed(GridSpec(n, 1)), Rational(1));
    for (unsigned long m = 1; m < 60; ++m) {
      EXPECT_GT(q_ratio_closed(GridSpec(n, m)), q_ratio_closed(GridSpec(n, m + 1)));
    }
  }
}

TEST(QRatioTest, ApproachesLimit) {
  for (unsigned long n = 1; n <= 6; ++n) {
    for (unsigned long m : {1UL, 7UL, 100UL, 12345UL}) {
      // q_n(m) * 3^n = (1 + 2/m)^n
      EXPECT_EQ(q_ratio_closed(GridSpec(n, m)) * Rational(pow(BigInt(3), n)),
                pow(Rational(1) + frac(2, static_cast<long>(m)), n));
    }
  }
}

TEST(LimitTest, Values) {
  EXPECT_EQ(q_limit(1), frac(1, 3));
  EXPECT_EQ(q_limit(2), frac(1, 9));
  EXPECT_EQ(q_limit(0), Rational(1));
  EXPECT_EQ(r_limit(2), frac(1, 10));
  EXPECT_EQ(r_limit(1), frac(1, 3));
  EXPECT_EQ(r_limit(3), frac(1, 35));
}

TEST(RRatioTest, Examples) {
  EXPECT_EQ(r_ratio_sum(GridSpec(2, 2)), frac(2, 5));
  EXPECT_EQ(r_ratio_sum(GridSpec(3, 1)), Rational(1));
  EXPECT_EQ(r_ratio_sum(GridSpec(1, 2)), frac(2, 3));
  EXPECT_EQ(r_ratio_binomial(GridSpec(2, 2)), frac(2, 5));
  EXPECT_EQ(r_ratio_binomial(GridSpec(1, 1)), Rational(1));
  EXPECT_EQ(r_ratio_binomial(GridSpec(3, 4)), r_ratio_sum(GridSpec(3, 4)));
}

TEST(RRatioTest, TwoDimensionalBruteForce) {
  for (unsigned long m = 1; m <= 7; ++m) {
    EXPECT_EQ(r_ratio_sum(GridSpec(2, m)), rectangle_mean_2d(m, true)) << "m=" << m;
  }
}

TEST(RRatioTest, RoutesAgree) {
  for (unsigned long n = 1; n <= 4; ++n)
    for (unsigned long m = 1; m <= 8; ++m)
      EXPECT_EQ(r_ratio_sum(GridSpec(n, m)), r_ratio_binomial(GridSpec(n, m)));
}

TEST(RRatioTest, OneDimensionCubesAreCuboids) {
  for (unsigned long m = 1; m <= 100; ++m) {
    EXPECT_EQ(r_ratio_sum(GridSpec(1, m)), q_ratio_sum(GridSpec(1, m)));
  }
}

TEST(RRatioTest, DegenerateGridIsWholeCube) {
  for (unsigned long n = 1; n <= 8; ++n) {
    EXPECT_EQ(r_ratio_sum(GridSpec(n, 1)), Rational(1));
    EXPECT_EQ(q_ratio_sum(GridSpec(n, 1)), Rational(1));
  }
}

TEST(CentralBinomialRelationTest, OddFromEven) {
  for (unsigned long n = 0; n <= 500; ++n) {
    EXPECT_EQ((n + 1) * binomial(2 * n + 1, n), (2 * n + 1) * binomial(2 * n, n));
  }
}

TEST(EdgeRatioTest, Examples) {
  const RootBound one = edge_ratio_bounds(1, 6);
  EXPECT_TRUE(one.is_exact());
  EXPECT_EQ(one.lo, frac(1, 3));

  const RootBound two = edge_ratio_bounds(2, 4);
  EXPECT_TRUE(encloses(two, frac(1, 10)));
  EXPECT_EQ(two.lo, frac(3162, 10000));  // sqrt(0.1) = 0.316227...

  EXPECT_EQ(binomial(21, 10), 352716);
  const RootBound ten = edge_ratio_bounds(10, 3);
  EXPECT_TRUE(encloses(ten, frac(1, 352716)));
  EXPECT_EQ(ten.lo, frac(278, 1000));  // 0.278777...
  EXPECT_THROW(edge_ratio_bounds(0, 3), std::invalid_argument);
}

TEST(ScaleVolumeTest, Examples) {
  EXPECT_EQ(scale_volume(frac(1, 9), Rational(1), 2).volume(), frac(1, 9));
  EXPECT_EQ(scale_volume(frac(1, 9), Rational(3), 2).volume(), Rational(1));
  EXPECT_EQ(scale_volume(frac(2, 5), frac(1, 2), 2).volume(), frac(1, 10));
  EXPECT_THROW(scale_volume(frac(1, 9), Rational(0), 2), std::invalid_argument);
  EXPECT_THROW(scale_volume(frac(1, 9), Rational(-2), 2), std::invalid_argument);
}

}  // namespace
}  // namespace gridmean
