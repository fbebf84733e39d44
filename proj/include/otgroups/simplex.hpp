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

#ifndef OTGROUPS_SIMPLEX_HPP
#define OTGROUPS_SIMPLEX_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "otgroups/group.hpp"
#include "otgroups/measure.hpp"

namespace otg {

/// Finitely supported probability measure on a group: positive rational
/// weights on canonical element keys, summing to exactly 1. Immutable.
class SimplexElement {
 public:
  static SimplexElement dirac(std::shared_ptr<const Group> group, const std::string& key);

  /// Uniform measure on a multiset of elements; multiplicities accumulate.
  static SimplexElement uniform(std::shared_ptr<const Group> group,
                                const std::vector<std::string>& elements);

  static SimplexElement from_weights(std::shared_ptr<const Group> group,
                                     const std::vector<std::pair<std::string, Rat>>& weights);

  const std::map<std::string, Rat>& weights() const { return weights_; }
  std::size_t support_size() const { return weights_.size(); }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const Group& group() const { return *group_; }

  bool operator==(const SimplexElement& other) const;

 private:
  SimplexElement(std::shared_ptr<const Group> group, std::map<std::string, Rat> weights);

  std::shared_ptr<const Group> group_;
  std::map<std::string, Rat> weights_;
};

/// Group-algebra product (alpha * beta)(h) = sum_g alpha(g) beta(g^-1 h).
SimplexElement convolve(const SimplexElement& alpha, const SimplexElement& beta);

enum class Side { Left, Right };

/// Right translate moves weight from h to hg; left translate to gh.
SimplexElement translate(const SimplexElement& beta, std::string_view g, Side side);

/// Views a simplex element as a nonnegative measure of total mass 1 on a
/// metric space whose point ids are the normal-form keys.
SignedMeasure as_signed_measure(const SimplexElement& beta,
                                std::shared_ptr<const MetricSpace> space);

}  // namespace otg

#endif  // OTGROUPS_SIMPLEX_HPP
