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

#ifndef OTGROUPS_QUOTIENT_HPP
#define OTGROUPS_QUOTIENT_HPP

#include <memory>
#include <string>
#include <vector>

#include "otgroups/measure.hpp"
#include "otgroups/metric_space.hpp"

namespace otg {

/// Image indices: p[x] is where point x is sent.
using Permutation = std::vector<std::size_t>;

/// A finite group acting by isometries on a finite explicit metric space,
/// held as the full set of action permutations. Construction validates the
/// group structure (identity, closure; inverses follow from finiteness) and
/// the isometry property exhaustively.
class FiniteAction {
 public:
  /// The permutation list must already be a group. Throws ValidationError
  /// when it is not closed, lacks the identity, or fails the isometry check.
  static FiniteAction from_permutations(std::shared_ptr<const MetricSpace> space,
                                        std::vector<Permutation> permutations);

  /// Closes the generators under composition first (bounded), then validates.
  static FiniteAction from_generators(std::shared_ptr<const MetricSpace> space,
                                      std::vector<Permutation> generators);

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::shared_ptr<const MetricSpace>& space_ptr() const { return space_; }
  const MetricSpace& space() const { return *space_; }

  std::size_t apply(std::size_t element, std::size_t point) const {
    return elements_[element][point];
  }

 private:
  FiniteAction(std::shared_ptr<const MetricSpace> space, std::vector<Permutation> elements);

  std::shared_ptr<const MetricSpace> space_;
  std::vector<Permutation> elements_;
};

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> classes;  // sorted members, ordered by least member
  std::vector<std::size_t> class_of;              // point -> class index
};

/// Orbit partition of the point set.
OrbitPartition orbits(const FiniteAction& action);

/// The orbit space with the Hausdorff metric, which for group orbits
/// collapses to min_{h} d(h x, y). Class labels join member ids with ';'.
struct QuotientSpace {
  std::shared_ptr<const MetricSpace> base;
  OrbitPartition partition;
  std::vector<std::string> class_labels;
  std::shared_ptr<const MetricSpace> metric;  // explicit space over the classes

  std::size_t class_of(std::size_t base_point) const { return partition.class_of[base_point]; }
};

QuotientSpace quotient_metric(const FiniteAction& action);

/// Sums mass over each orbit class: (A xi)(c) = sum_{x in c} xi(x).
/// A norm contraction from measures on X to measures on the quotient.
SignedMeasure pushforward(const SignedMeasure& xi, const QuotientSpace& quotient);

/// Right inverse of pushforward realizing the quotient norm: decomposes
/// zeta along its own optimal plan and lifts every move to orbit
/// representatives at minimal distance. On finite spaces the minimum is
/// attained, so the result satisfies ||lift(zeta)|| = ||zeta|| for every
/// epsilon >= 0; epsilon mirrors the (1+epsilon) slack of the general
/// construction and must be nonnegative.
SignedMeasure lift(const SignedMeasure& zeta, const QuotientSpace& quotient,
                   const Rat& epsilon = Rat(0));

}  // namespace otg

#endif  // OTGROUPS_QUOTIENT_HPP
