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

#include "otgroups/simplex.hpp"

#include "otgroups/errors.hpp"

namespace otg {

SimplexElement::SimplexElement(std::shared_ptr<const Group> group,
                               std::map<std::string, Rat> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (!group_) throw ValidationError("simplex element requires a group");
  Rat total(0);
  for (const auto& [key, weight] : weights_) {
    group_->require_element(key);
    if (weight <= 0) {
      throw ValidationError("simplex weight at '" + key + "' must be positive, got " +
                            rat_to_string(weight));
    }
    total += weight;
  }
  if (total != 1) {
    throw ValidationError("simplex weights must sum to 1, got " + rat_to_string(total));
  }
}

SimplexElement SimplexElement::dirac(std::shared_ptr<const Group> group, const std::string& key) {
  std::map<std::string, Rat> weights;
  weights.emplace(key, Rat(1));
  return SimplexElement(std::move(group), std::move(weights));
}

SimplexElement SimplexElement::uniform(std::shared_ptr<const Group> group,
                                       const std::vector<std::string>& elements) {
  if (elements.empty()) throw EmptySetError("uniform simplex element needs elements");
  const Rat share(1, static_cast<unsigned long>(elements.size()));
  std::map<std::string, Rat> weights;
  for (const auto& key : elements) weights[key] += share;
  return SimplexElement(std::move(group), std::move(weights));
}

SimplexElement SimplexElement::from_weights(
    std::shared_ptr<const Group> group,
    const std::vector<std::pair<std::string, Rat>>& weights) {
  std::map<std::string, Rat> merged;
  for (const auto& [key, weight] : weights) merged[key] += weight;
  return SimplexElement(std::move(group), std::move(merged));
}

bool SimplexElement::operator==(const SimplexElement& other) const {
  return group_ == other.group_ && weights_ == other.weights_;
}

SimplexElement convolve(const SimplexElement& alpha, const SimplexElement& beta) {
  if (alpha.group_ptr() != beta.group_ptr()) {
    throw GroupMismatchError("convolution requires elements of the same group");
  }
  const Group& group = alpha.group();
  std::vector<std::pair<std::string, Rat>> products;
  products.reserve(alpha.weights().size() * beta.weights().size());
  for (const auto& [g, wg] : alpha.weights()) {
    for (const auto& [h, wh] : beta.weights()) {
      products.emplace_back(group.multiply(g, h), Rat(wg * wh));
    }
  }
  return SimplexElement::from_weights(alpha.group_ptr(), products);
}

SimplexElement translate(const SimplexElement& beta, std::string_view g, Side side) {
  const Group& group = beta.group();
  group.require_element(g);
  std::vector<std::pair<std::string, Rat>> moved;
  moved.reserve(beta.weights().size());
  for (const auto& [h, w] : beta.weights()) {
    moved.emplace_back(side == Side::Right ? group.multiply(h, g) : group.multiply(g, h), w);
  }
  return SimplexElement::from_weights(beta.group_ptr(), moved);
}

SignedMeasure as_signed_measure(const SimplexElement& beta,
                                std::shared_ptr<const MetricSpace> space) {
  std::vector<std::pair<std::string, Rat>> entries(beta.weights().begin(), beta.weights().end());
  return SignedMeasure::from_entries(std::move(space), entries);
}

}  // namespace otg
