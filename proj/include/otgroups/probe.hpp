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

#ifndef OTGROUPS_PROBE_HPP
#define OTGROUPS_PROBE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "otgroups/measure.hpp"
#include "otgroups/simplex.hpp"
#include "otgroups/transport.hpp"

namespace otg {

/// A quantitative invariance question: how close to translation-invariant
/// can a probability measure be over the finite window E, in transport
/// distance, on the given group metric?
struct ProbeTask {
  std::shared_ptr<const Group> group;
  std::shared_ptr<const MetricSpace> metric;  // typically a word-metric space
  std::vector<std::string> elements;          // E: distinct canonical keys
  Rat epsilon;                                // > 0

  ProbeTask(std::shared_ptr<const Group> group, std::shared_ptr<const MetricSpace> metric,
            std::vector<std::string> elements, Rat epsilon);
};

/// Full mode maximizes over all unordered pairs of E. Anchored mode pairs
/// each element with the measure itself (its right translate by nothing),
/// i.e. computes max_g ||beta g - beta||; by the triangle inequality the
/// full defect is at most twice the anchored maximum.
enum class DefectMode { Full, Anchored };

struct PairDefect {
  std::string g, f;  // f empty in anchored mode: the pair is (g, identity)
  Rat value;
  TransportPlan plan;
  LipschitzWitness witness;
  bool certified = false;
};

struct DefectReport {
  DefectMode mode = DefectMode::Full;
  Rat defect;  // max over computed pairs
  std::vector<PairDefect> pairs;
  SimplexElement beta;
};

/// Transport defect of beta over the task window. Every pair gets an exact
/// plan and dual witness, re-verified by the independent certificate check.
/// Per-pair solves run concurrently under Exec::Parallel.
DefectReport defect(const SimplexElement& beta, const ProbeTask& task,
                    DefectMode mode = DefectMode::Full, Exec exec = Exec::Parallel);

/// The explicit almost-invariant average on the infinite dihedral group:
/// uniform on {t^n, t^n s : |n| <= M}, support size 4M+2. Paired with the
/// window {t^n, t^n s : |n| <= N} it satisfies
/// ||beta g - beta|| <= (2N^2+2N)/(4M+2) for every window element g.
/// N is the intended window half-width; it only documents that pairing and
/// must be >= 1. M >= 0.
SimplexElement dihedral_folner(std::shared_ptr<const Group> dihedral, long window_n, long m);

/// Window {t^n, t^n s : |n| <= N} in a fixed deterministic order.
std::vector<std::string> dihedral_window(const Group& dihedral, long window_n);

struct UniformMultiset {
  std::shared_ptr<const Group> group;
  std::vector<std::string> elems;  // h_1..h_n, repetitions allowed, n >= 1
};

struct MultisetApprox {
  UniformMultiset multiset;
  Rat total_variation;  // |beta - uniform(multiset)|_1, exact
  bool exact = false;   // uniform(multiset) == beta
};

/// Writes beta as (approximately) a uniform average h_1..h_n with
/// n <= denominator_cap. Exact whenever beta's common denominator fits the
/// cap; otherwise a largest-remainder rounding with total variation at most
/// |supp(beta)| / denominator_cap. Throws CapTooSmallError when the cap is
/// below the support size.
MultisetApprox to_uniform_multiset(const SimplexElement& beta,
                                   unsigned long denominator_cap);

/// min over permutations of (1/n) sum_i d(h_i g, h_sigma(i) f), computed by
/// optimal assignment on the translated lists. Equals the transport norm
/// ||beta' g - beta' f|| for beta' uniform on the multiset.
std::pair<Rat, Assignment> matching_defect(const UniformMultiset& h, std::string_view g,
                                           std::string_view f, const MetricSpace& metric);

/// Number of indices with d(h_i g, h_sigma(i) f) >= threshold under the
/// optimal sigma of matching_defect. Always at most n * value / threshold.
long concentration_count(const UniformMultiset& h, std::string_view g, std::string_view f,
                         const Rat& threshold, const MetricSpace& metric);

/// Certified lower bound sum_x (beta g - beta f)(x) * phi(x) for a witness
/// phi that is 1-Lipschitz on supp(beta g) U supp(beta f); validated, and
/// WitnessError is thrown when the validation fails. The result is at most
/// ||beta g - beta f||.
Rat dual_obstruction(const SimplexElement& beta, std::string_view g, std::string_view f,
                     const LipschitzWitness& witness,
                     std::shared_ptr<const MetricSpace> metric);

/// Ordered candidate pool for the greedy search.
struct CandidatePool {
  std::vector<std::pair<std::string, SimplexElement>> candidates;  // (label, beta)
};

/// Uniform measures on word balls of radius 1..max_radius.
CandidatePool pool_uniform_balls(std::shared_ptr<const Group> group,
                                 const std::vector<std::string>& generator_keys, long max_radius,
                                 long radius_cap = kDefaultRadiusCap);

/// dihedral_folner measures for each listed M.
CandidatePool pool_dihedral_folner(std::shared_ptr<const Group> dihedral, long window_n,
                                   const std::vector<long>& ms);

struct MinimizeOptions {
  std::size_t budget = 200;        // candidate evaluations
  std::size_t max_support = 100000;  // abort, never truncate
  DefectMode mode = DefectMode::Full;
  Exec exec = Exec::Parallel;
};

enum class MinimizeOutcome { Success, BudgetExhausted, SupportCapExceeded };

const char* minimize_outcome_name(MinimizeOutcome outcome);

/// Failure is a value, not an exception: it carries the best report found.
struct MinimizeResult {
  MinimizeOutcome outcome = MinimizeOutcome::BudgetExhausted;
  DefectReport best;
  std::size_t evaluations = 0;
  std::vector<std::string> chosen;  // labels of composed candidates, in order

  bool success() const { return outcome == MinimizeOutcome::Success; }
};

/// Greedy sequential composition: starting from the Dirac at the identity,
/// repeatedly convolve on the left with the pool candidate that most
/// reduces the currently worst pair, until the defect drops below epsilon
/// or the evaluation budget runs out. Deterministic given pool order.
MinimizeResult sequential_minimize(const ProbeTask& task, const CandidatePool& pool,
                                   const MinimizeOptions& options = {});

}  // namespace otg

#endif  // OTGROUPS_PROBE_HPP
