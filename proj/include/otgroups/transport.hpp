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

#ifndef OTGROUPS_TRANSPORT_HPP
#define OTGROUPS_TRANSPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "otgroups/measure.hpp"

namespace otg {

struct TransportSolution {
  Rat value;
  TransportPlan plan;
  LipschitzWitness witness;
};

/// Optimal transport realizing a mean-zero measure: minimal cost, a primal
/// plan in reduced form (sources have positive mass, sinks negative), and a
/// dual potential that is 1-Lipschitz on the support with pairing equal to
/// the cost. Exact in all three parts. Throws MeanNotZeroError.
TransportSolution solve_transport(const SignedMeasure& xi);

/// Transport-cost norm of a mean-zero measure plus the optimal plan.
std::pair<Rat, TransportPlan> arens_eells_norm(const SignedMeasure& xi);

/// Dual value with an optimal potential restricted to the support.
/// The value equals arens_eells_norm(xi).first exactly.
std::pair<Rat, LipschitzWitness> kantorovich_dual(const SignedMeasure& xi);

/// Independent certificate check: flow balance in reduced form, witness
/// 1-Lipschitz on supp(xi), and plan cost equal to the dual pairing,
/// all as exact rationals. Never throws on bad certificates.
bool verify_certificate(const SignedMeasure& xi, const TransportPlan& plan,
                        const LipschitzWitness& witness);

struct WassersteinResult {
  Rat value;
  /// Optimal coupling with marginals mu and nu; includes diagonal moves
  /// (x, x, m) for mass that stays put.
  TransportPlan coupling;
};

/// Wasserstein distance between two nonnegative measures of equal total
/// mass. Throws on negative entries or a mass mismatch.
WassersteinResult wasserstein(const SignedMeasure& mu, const SignedMeasure& nu);

/// Minimal-cost perfect matching between two equal-length point lists.
/// Among the optimal permutations, returns the lexicographically least.
/// Deliberately a separate algorithm (dense Hungarian) from the flow
/// solver so the two can cross-check each other.
std::pair<Assignment, Rat> optimal_assignment(const std::vector<std::size_t>& xs,
                                              const std::vector<std::size_t>& ys,
                                              const MetricSpace& space);

std::pair<Assignment, Rat> optimal_assignment(const std::vector<std::string>& xs,
                                              const std::vector<std::string>& ys,
                                              const MetricSpace& space);

}  // namespace otg

#endif  // OTGROUPS_TRANSPORT_HPP
