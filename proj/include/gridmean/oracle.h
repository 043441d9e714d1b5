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

// Brute-force enumeration of grid-aligned boxes, used as ground truth for
// the closed forms in grid_stats.h.
//
// Placement level visits every box by its corner coordinates and trusts no
// counting formula. Shape level visits edge-length patterns and weights each
// by its placement count from grid_stats.

#include <cstdint>
#include <stdexcept>

#include "gridmean/exact.h"
#include "gridmean/grid_stats.h"

namespace gridmean {

enum class EnumerationLevel { placement, shape };
enum class BoxKind { cuboid, cube };

struct EnumerationBudget {
  std::uint64_t max_boxes;
  EnumerationLevel level;

  /// Throws std::invalid_argument when max_boxes is zero.
  EnumerationBudget(std::uint64_t max_boxes, EnumerationLevel level);

  /// 10^7 boxes.
  static EnumerationBudget placement();
  /// 10^6 shapes.
  static EnumerationBudget shape();
};

/// Thrown before enumeration starts when the predicted size is over budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt predicted, std::uint64_t budget);

  const BigInt& predicted() const { return predicted_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt predicted_;
  std::uint64_t budget_;
};

/// Objects the enumeration at `level` would visit: boxes for placement,
/// shapes for shape level.
BigInt predicted_enumeration_size(const GridSpec& g, BoxKind kind, EnumerationLevel level);

/// Mean volume of all boxes in [0,1]^n, i.e. q_n(m). `jobs` splits the work
/// by first-axis interval (boxes) or by edge length (cubes); the result does
/// not depend on it.
Rational cuboid_mean_bruteforce(const GridSpec& g, const EnumerationBudget& budget,
                                unsigned jobs = 1);

/// Mean volume of all cubes in [0,1]^n, i.e. r_n(m).
Rational cube_mean_bruteforce(const GridSpec& g, const EnumerationBudget& budget,
                              unsigned jobs = 1);

/// Number of boxes (or cubes) found by enumeration.
BigInt count_bruteforce(const GridSpec& g, BoxKind kind, const EnumerationBudget& budget,
                        unsigned jobs = 1);

}  // namespace gridmean
