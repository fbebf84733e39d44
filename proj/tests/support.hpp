// Copyright 2026 The otgroups authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared fixtures and independent oracles for the test suites. Everything
// here must stay independent of the production solve paths it checks.

#ifndef OTGROUPS_TESTS_SUPPORT_HPP
#define OTGROUPS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "otgroups/measure.hpp"
#include "otgroups/metric_space.hpp"
#include "otgroups/rational.hpp"

namespace otg::testing {

/// Explicit euclidean metric on the integer points lo..hi, ids "lo".."hi".
inline std::shared_ptr<MetricSpace> int_line_explicit(long lo, long hi) {
  std::vector<std::string> points;
  for (long v = lo; v <= hi; ++v) points.push_back(std::to_string(v));
  const std::size_t n = points.size();
  std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long a = lo + static_cast<long>(i), b = lo + static_cast<long>(j);
      matrix[i][j] = Rat(a > b ? a - b : b - a);
    }
  }
  return std::make_shared<ExplicitMetricSpace>(std::move(points), std::move(matrix));
}

/// Open oracle space: euclidean distance on arbitrary integer ids.
inline std::shared_ptr<MetricSpace> int_line_oracle() {
  return std::make_shared<OracleMetricSpace>(
      std::vector<std::string>{},
      [](std::string_view a, std::string_view b) {
        long va = std::stol(std::string(a));
        long vb = std::stol(std::string(b));
        return Rat(va > vb ? va - vb : vb - va);
      },
      /*open_points=*/true, "euclidean Z (oracle)");
}

/// Random pseudometric: random positive symmetric base, metrized by the
/// all-pairs shortest-path closure. With allow_zero_pairs, some distinct
/// points may end at distance zero (an honest ecart).
inline std::shared_ptr<ExplicitMetricSpace> random_metric(std::mt19937_64& rng, std::size_t n,
                                                          bool allow_zero_pairs = false) {
  std::uniform_int_distribution<long> num(1, 60);
  std::uniform_int_distribution<long> den(1, 10);
  std::uniform_int_distribution<int> zero_roll(0, 19);
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat value(num(rng), den(rng));
      if (allow_zero_pairs && zero_roll(rng) == 0) value = 0;
      d[i][j] = value;
      d[j][i] = std::move(value);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rat through = d[i][k] + d[k][j];
        if (through < d[i][j]) d[i][j] = std::move(through);
      }
    }
  }
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  return std::make_shared<ExplicitMetricSpace>(std::move(points), std::move(d));
}

/// Random mean-zero measure with a common denominator <= max_den.
inline SignedMeasure random_mean_zero(std::mt19937_64& rng,
                                      std::shared_ptr<const MetricSpace> space,
                                      std::size_t support, long max_num = 20,
                                      long max_den = 100) {
  const std::size_t n = space->point_count();
  support = std::min(support, n);
  std::vector<std::size_t> points(n);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);

  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<long> num(-max_num, max_num);
  const long common = den(rng);

  SignedMeasure xi(std::move(space));
  long long running = 0;
  for (std::size_t k = 0; k + 1 < support; ++k) {
    long a = num(rng);
    running += a;
    xi.add(points[k], Rat(a, common));
  }
  if (support >= 1) {
    xi.add(points[support - 1], Rat(static_cast<long>(-running), common));
  }
  return xi;
}

/// Independent oracle: minimum assignment cost over all n! permutations,
/// together with the lexicographically least optimal permutation.
inline std::pair<Rat, std::vector<std::size_t>> brute_force_assignment(
    const std::vector<std::size_t>& xs, const std::vector<std::size_t>& ys,
    const MetricSpace& space) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat best;
  std::vector<std::size_t> best_perm;
  bool have = false;
  do {
    Rat total(0);
    for (std::size_t i = 0; i < n; ++i) total += space.distance(xs[i], ys[perm[i]]);
    if (!have || total < best) {
      best = std::move(total);
      best_perm = perm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

}  // namespace otg::testing

#endif  // OTGROUPS_TESTS_SUPPORT_HPP
