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

#include "otgroups/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "otgroups/errors.hpp"
#include "otgroups/transport.hpp"

namespace otg {

namespace {

bool is_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t image : p) {
    if (image >= n || seen[image]) return false;
    seen[image] = 1;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

}  // namespace

FiniteAction::FiniteAction(std::shared_ptr<const MetricSpace> space,
                           std::vector<Permutation> elements)
    : space_(std::move(space)), elements_(std::move(elements)) {
  if (!space_) throw ValidationError("finite action requires a metric space");
  if (space_->open()) {
    throw ValidationError("finite actions require a closed (finite, explicit) metric space");
  }
  const std::size_t n = space_->point_count();

  for (const auto& p : elements_) {
    if (!is_permutation(p, n)) {
      throw ValidationError("action table contains a non-permutation");
    }
  }

  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());

  Permutation identity(n);
  for (std::size_t x = 0; x < n; ++x) identity[x] = x;
  std::set<Permutation> table(elements_.begin(), elements_.end());
  if (table.find(identity) == table.end()) {
    throw ValidationError("action is missing the identity permutation");
  }
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (table.find(compose(a, b)) == table.end()) {
        throw ValidationError("action permutations are not closed under composition");
      }
    }
  }

  // isometry: d(gx, gy) = d(x, y), checked exhaustively
  for (const auto& p : elements_) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (space_->distance(p[x], p[y]) != space_->distance(x, y)) {
          throw ValidationError("action is not by isometries: distance of (" +
                                space_->point_at(x) + ", " + space_->point_at(y) +
                                ") changes under a group element");
        }
      }
    }
  }
}

FiniteAction FiniteAction::from_permutations(std::shared_ptr<const MetricSpace> space,
                                             std::vector<Permutation> permutations) {
  return FiniteAction(std::move(space), std::move(permutations));
}

FiniteAction FiniteAction::from_generators(std::shared_ptr<const MetricSpace> space,
                                           std::vector<Permutation> generators) {
  if (!space) throw ValidationError("finite action requires a metric space");
  const std::size_t n = space->point_count();
  for (const auto& p : generators) {
    if (!is_permutation(p, n)) {
      throw ValidationError("action table contains a non-permutation");
    }
  }
  Permutation identity(n);
  for (std::size_t x = 0; x < n; ++x) identity[x] = x;

  constexpr std::size_t kClosureCap = 100000;
  std::set<Permutation> closed;
  closed.insert(identity);
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = compose(g, p);
        if (closed.insert(q).second) {
          if (closed.size() > kClosureCap) {
            throw ValidationError("permutation closure exceeds " +
                                  std::to_string(kClosureCap) + " elements");
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return FiniteAction(std::move(space),
                      std::vector<Permutation>(closed.begin(), closed.end()));
}

OrbitPartition orbits(const FiniteAction& action) {
  const std::size_t n = action.space().point_count();
  OrbitPartition partition;
  partition.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (partition.class_of[x] != n) continue;
    const std::size_t cls = partition.classes.size();
    std::vector<std::size_t> members;
    for (const auto& p : action.elements()) {
      const std::size_t image = p[x];
      if (partition.class_of[image] == n) {
        partition.class_of[image] = cls;
        members.push_back(image);
      }
    }
    std::sort(members.begin(), members.end());
    partition.classes.push_back(std::move(members));
  }
  return partition;
}

QuotientSpace quotient_metric(const FiniteAction& action) {
  QuotientSpace quotient;
  quotient.base = action.space_ptr();
  quotient.partition = orbits(action);
  const auto& classes = quotient.partition.classes;

  for (const auto& members : classes) {
    std::string label = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) label += ';';
      label += action.space().point_at(members[i]);
    }
    label += '}';
    quotient.class_labels.push_back(std::move(label));
  }

  // For group orbits the Hausdorff distance equals the minimal distance
  // between the orbits.
  const std::size_t k = classes.size();
  std::vector<std::vector<Rat>> matrix(k, std::vector<Rat>(k, Rat(0)));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t c = b + 1; c < k; ++c) {
      Rat best = action.space().distance(classes[b][0], classes[c][0]);
      for (std::size_t x : classes[b]) {
        for (std::size_t y : classes[c]) {
          Rat d = action.space().distance(x, y);
          if (d < best) best = std::move(d);
        }
      }
      matrix[b][c] = best;
      matrix[c][b] = std::move(best);
    }
  }
  quotient.metric = std::make_shared<ExplicitMetricSpace>(quotient.class_labels,
                                                          std::move(matrix));
  return quotient;
}

SignedMeasure pushforward(const SignedMeasure& xi, const QuotientSpace& quotient) {
  if (xi.space_ptr() != quotient.base) {
    throw SpaceMismatchError("pushforward requires a measure on the action's base space");
  }
  if (!xi.mean_zero()) {
    throw MeanNotZeroError("pushforward requires a mean-zero measure");
  }
  SignedMeasure image(quotient.metric);
  for (const auto& [point, mass] : xi.entries()) {
    image.add(quotient.class_of(point), mass);
  }
  return image;
}

SignedMeasure lift(const SignedMeasure& zeta, const QuotientSpace& quotient,
                   const Rat& epsilon) {
  if (zeta.space_ptr() != quotient.metric) {
    throw SpaceMismatchError("lift requires a measure on the quotient space");
  }
  if (!zeta.mean_zero()) {
    throw MeanNotZeroError("lift requires a mean-zero measure");
  }
  if (epsilon < 0) throw ValidationError("epsilon must be nonnegative");

  // Decompose zeta along its own optimal plan, then realize each move by
  // orbit representatives at minimal distance (the minimum is attained, so
  // any epsilon >= 0 slack is satisfied).
  TransportSolution solution = solve_transport(zeta);
  SignedMeasure lifted(quotient.base);
  for (const auto& move : solution.plan.moves) {
    const auto& sources = quotient.partition.classes[move.source];
    const auto& sinks = quotient.partition.classes[move.sink];
    std::size_t best_x = sources[0];
    std::size_t best_y = sinks[0];
    Rat best = quotient.base->distance(best_x, best_y);
    for (std::size_t x : sources) {
      for (std::size_t y : sinks) {
        Rat d = quotient.base->distance(x, y);
        if (d < best) {
          best = std::move(d);
          best_x = x;
          best_y = y;
        }
      }
    }
    lifted.add(best_x, move.mass);
    lifted.add(best_y, Rat(-move.mass));
  }
  return lifted;
}

}  // namespace otg
