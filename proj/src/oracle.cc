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

#include "gridmean/oracle.h"

#include <string>
#include <utility>
#include <vector>

#include "gridmean/parallel.h"

namespace gridmean {

namespace {

// Volumes are accumulated as integers over the common denominator m^n.
struct Tally {
  BigInt volume_sum = 0;
  BigInt count = 0;

  Tally& operator+=(const Tally& other) {
    volume_sum += other.volume_sum;
    count += other.count;
    return *this;
  }
};

struct Interval {
  unsigned long lo;
  unsigned long hi;
};

// Advances digits[from..] like an odometer with per-digit limit `radix`.
// Returns false after the last combination.
bool advance(std::vector<unsigned long>& digits, std::size_t from, unsigned long radix) {
  for (std::size_t i = digits.size(); i-- > from;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

void check_budget(const GridSpec& g, BoxKind kind, const EnumerationBudget& budget) {
  BigInt predicted = predicted_enumeration_size(g, kind, budget.level);
  if (predicted > budget.max_boxes) throw BudgetExceeded(std::move(predicted), budget.max_boxes);
}

Tally sum_tallies(const std::vector<Tally>& parts) {
  Tally total;
  for (const Tally& t : parts) total += t;
  return total;
}

Tally enumerate_cuboid_placements(const GridSpec& g, unsigned jobs) {
  std::vector<Interval> intervals;
  for (unsigned long a = 0; a < g.m(); ++a) {
    for (unsigned long b = a + 1; b <= g.m(); ++b) intervals.push_back({a, b});
  }
  const unsigned long radix = intervals.size();

  auto parts = parallel_map<Tally>(intervals.size(), jobs, [&](std::size_t first) {
    Tally t;
    std::vector<unsigned long> pick(g.n(), 0);
    pick[0] = first;
    do {
      BigInt volume = 1;
      for (unsigned long idx : pick) volume *= intervals[idx].hi - intervals[idx].lo;
      t.volume_sum += volume;
      ++t.count;
    } while (advance(pick, 1, radix));
    return t;
  });
  return sum_tallies(parts);
}

Tally enumerate_cuboid_shapes(const GridSpec& g, unsigned jobs) {
  auto parts = parallel_map<Tally>(g.m(), jobs, [&](std::size_t first) {
    Tally t;
    std::vector<unsigned long> digits(g.n(), 0);
    digits[0] = first;
    BoxShape shape{std::vector<unsigned long>(g.n())};
    do {
      BigInt volume = 1;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        shape.edges[i] = digits[i] + 1;
        volume *= shape.edges[i];
      }
      const BigInt placements = count_cuboids_by_shape(g, shape);
      t.volume_sum += placements * volume;
      t.count += placements;
    } while (advance(digits, 1, g.m()));
    return t;
  });
  return sum_tallies(parts);
}

Tally enumerate_cube_placements(const GridSpec& g, unsigned jobs) {
  auto parts = parallel_map<Tally>(g.m(), jobs, [&](std::size_t idx) {
    const unsigned long edge = idx + 1;
    Tally t;
    std::vector<unsigned long> corner(g.n(), 0);
    do {
      BigInt volume = 1;
      for (unsigned long c : corner) volume *= (c + edge) - c;
      t.volume_sum += volume;
      ++t.count;
    } while (advance(corner, 0, g.m() + 1 - edge));
    return t;
  });
  return sum_tallies(parts);
}

Tally enumerate_cube_shapes(const GridSpec& g) {
  Tally t;
  for (unsigned long j = 1; j <= g.m(); ++j) {
    const BigInt placements = count_cubes_by_edge(g, j);
    t.volume_sum += placements * pow(BigInt(j), g.n());
    t.count += placements;
  }
  return t;
}

Tally enumerate(const GridSpec& g, BoxKind kind, const EnumerationBudget& budget, unsigned jobs) {
  check_budget(g, kind, budget);
  if (kind == BoxKind::cuboid) {
    return budget.level == EnumerationLevel::placement ? enumerate_cuboid_placements(g, jobs)
                                                       : enumerate_cuboid_shapes(g, jobs);
  }
  return budget.level == EnumerationLevel::placement ? enumerate_cube_placements(g, jobs)
                                                     : enumerate_cube_shapes(g);
}

Rational mean_of(const Tally& t, const GridSpec& g) {
  return Rational(t.volume_sum, t.count * pow(BigInt(g.m()), g.n()));
}

}  // namespace

EnumerationBudget::EnumerationBudget(std::uint64_t max_boxes, EnumerationLevel level)
    : max_boxes(max_boxes), level(level) {
  if (max_boxes == 0) throw std::invalid_argument("enumeration budget must be >= 1");
}

EnumerationBudget EnumerationBudget::placement() {
  return {10'000'000, EnumerationLevel::placement};
}

EnumerationBudget EnumerationBudget::shape() { return {1'000'000, EnumerationLevel::shape}; }

BudgetExceeded::BudgetExceeded(BigInt predicted, std::uint64_t budget)
    : std::runtime_error("enumeration would visit " + predicted.get_str() +
                         " objects, budget is " + std::to_string(budget)),
      predicted_(std::move(predicted)),
      budget_(budget) {}

BigInt predicted_enumeration_size(const GridSpec& g, BoxKind kind, EnumerationLevel level) {
  if (kind == BoxKind::cuboid) {
    return level == EnumerationLevel::placement ? total_cuboids(g) : pow(BigInt(g.m()), g.n());
  }
  return level == EnumerationLevel::placement ? total_cubes(g) : BigInt(g.m());
}

Rational cuboid_mean_bruteforce(const GridSpec& g, const EnumerationBudget& budget,
                                unsigned jobs) {
  return mean_of(enumerate(g, BoxKind::cuboid, budget, jobs), g);
}

Rational cube_mean_bruteforce(const GridSpec& g, const EnumerationBudget& budget, unsigned jobs) {
  return mean_of(enumerate(g, BoxKind::cube, budget, jobs), g);
}

BigInt count_bruteforce(const GridSpec& g, BoxKind kind, const EnumerationBudget& budget,
                        unsigned jobs) {
  return enumerate(g, kind, budget, jobs).count;
}

}  // namespace gridmean
