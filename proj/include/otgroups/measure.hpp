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

#ifndef OTGROUPS_MEASURE_HPP
#define OTGROUPS_MEASURE_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "otgroups/metric_space.hpp"
#include "otgroups/rational.hpp"

namespace otg {

/// Finitely supported signed measure with exact rational masses. Entries
/// never store zeros; keys are point indices into the referenced space.
class SignedMeasure {
 public:
  explicit SignedMeasure(std::shared_ptr<const MetricSpace> space);

  /// Builds from (point id, mass) pairs; repeated ids accumulate, zeros drop.
  /// Unknown ids are admitted on open spaces and rejected on closed ones.
  static SignedMeasure from_entries(std::shared_ptr<const MetricSpace> space,
                                    const std::vector<std::pair<std::string, Rat>>& entries);

  const std::map<std::size_t, Rat>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Accumulates mass at a point index; erases the entry when it cancels.
  void add(std::size_t point, const Rat& mass);

  Rat total_mass() const;
  bool mean_zero() const { return total_mass() == 0; }
  bool nonnegative() const;

  std::vector<std::size_t> support() const;

  const Rat* find(std::size_t point) const;

  SignedMeasure operator+(const SignedMeasure& other) const;
  SignedMeasure operator-(const SignedMeasure& other) const;
  SignedMeasure scaled(const Rat& c) const;

  const MetricSpace& space() const { return *space_; }
  const std::shared_ptr<const MetricSpace>& space_ptr() const { return space_; }

  bool operator==(const SignedMeasure& other) const;

 private:
  void require_same_space(const SignedMeasure& other) const;

  std::shared_ptr<const MetricSpace> space_;
  std::map<std::size_t, Rat> entries_;
};

/// Primal witness: mass moves from sources to sinks.
struct TransportPlan {
  struct Move {
    std::size_t source;
    std::size_t sink;
    Rat mass;  // > 0
  };
  std::vector<Move> moves;

  Rat cost(const MetricSpace& space) const;
};

/// Dual potential restricted to a finite point set.
struct LipschitzWitness {
  std::map<std::size_t, Rat> values;

  const Rat* find(std::size_t point) const;
  /// |values(x) - values(y)| <= d(x,y) over all pairs of `points`; false
  /// when some point has no value.
  bool lipschitz_on(const std::vector<std::size_t>& points, const MetricSpace& space) const;
};

/// Permutation sigma of {0..n-1}; sigma[i] is the sink index matched to i.
struct Assignment {
  std::vector<std::size_t> sigma;
};

}  // namespace otg

#endif  // OTGROUPS_MEASURE_HPP
