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

#include "otgroups/probe.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

#include "otgroups/errors.hpp"
#include "otgroups/parallel.hpp"

namespace otg {

ProbeTask::ProbeTask(std::shared_ptr<const Group> group_in,
                     std::shared_ptr<const MetricSpace> metric_in,
                     std::vector<std::string> elements_in, Rat epsilon_in)
    : group(std::move(group_in)),
      metric(std::move(metric_in)),
      elements(std::move(elements_in)),
      epsilon(std::move(epsilon_in)) {
  if (!group) throw ValidationError("probe task requires a group");
  if (!metric) throw ValidationError("probe task requires a metric");
  if (elements.empty()) throw EmptySetError("probe window E must be non-empty");
  if (epsilon <= 0) throw ValidationError("epsilon must be positive");
  std::set<std::string> seen;
  for (const auto& key : elements) {
    group->require_element(key);
    if (!seen.insert(key).second) {
      throw ValidationError("probe window E repeats element '" + key + "'");
    }
  }
}

namespace {

PairDefect solve_pair(const SimplexElement& beta, const ProbeTask& task, const std::string& g,
                      const std::string& f) {
  PairDefect result;
  result.g = g;
  result.f = f;
  try {
    SignedMeasure lhs = as_signed_measure(translate(beta, g, Side::Right), task.metric);
    SignedMeasure rhs = as_signed_measure(translate(beta, f, Side::Right), task.metric);
    SignedMeasure diff = lhs - rhs;
    TransportSolution solution = solve_transport(diff);
    result.value = std::move(solution.value);
    result.plan = std::move(solution.plan);
    result.witness = std::move(solution.witness);
    result.certified = verify_certificate(diff, result.plan, result.witness);
  } catch (const RadiusExceededError& e) {
    throw RadiusExceededError("pair (" + g + ", " + f + "): " + e.element, e.radius_cap);
  }
  return result;
}

}  // namespace

DefectReport defect(const SimplexElement& beta, const ProbeTask& task, DefectMode mode,
                    Exec exec) {
  if (beta.group_ptr() != task.group) {
    throw GroupMismatchError("beta and probe task use different groups");
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  if (mode == DefectMode::Full) {
    for (std::size_t i = 0; i < task.elements.size(); ++i) {
      for (std::size_t j = i + 1; j < task.elements.size(); ++j) {
        pairs.emplace_back(task.elements[i], task.elements[j]);
      }
    }
  } else {
    const std::string& anchor = task.group->identity();
    for (const auto& g : task.elements) {
      if (g != anchor) pairs.emplace_back(g, anchor);
    }
  }

  DefectReport report{mode, Rat(0), {}, beta};
  report.pairs.resize(pairs.size());
  if (pairs.empty()) return report;  // singleton window: defect 0

  if (exec == Exec::Parallel && pairs.size() > 1) {
    std::vector<std::exception_ptr> errors(pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
    for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        report.pairs[k] = solve_pair(beta, task, pairs[k].first, pairs[k].second);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      report.pairs[k] = solve_pair(beta, task, pairs[k].first, pairs[k].second);
    }
  }

  for (const auto& pair : report.pairs) {
    if (pair.value > report.defect) report.defect = pair.value;
  }
  return report;
}

SimplexElement dihedral_folner(std::shared_ptr<const Group> dihedral, long window_n, long m) {
  if (!dihedral || dihedral->spec().type != "dihedral_inf") {
    throw ValidationError("dihedral_folner requires the infinite dihedral group");
  }
  if (window_n < 1) throw ValidationError("window half-width must be at least 1");
  if (m < 0) throw ValidationError("interval half-width must be nonnegative");
  std::vector<std::string> support;
  support.reserve(static_cast<std::size_t>(4 * m + 2));
  for (long n = -m; n <= m; ++n) {
    support.push_back(n == 0 ? "e" : "t" + std::to_string(n));
  }
  for (long n = -m; n <= m; ++n) {
    support.push_back(n == 0 ? "s" : "t" + std::to_string(n) + "s");
  }
  return SimplexElement::uniform(std::move(dihedral), support);
}

std::vector<std::string> dihedral_window(const Group& dihedral, long window_n) {
  if (dihedral.spec().type != "dihedral_inf") {
    throw ValidationError("dihedral_window requires the infinite dihedral group");
  }
  std::vector<std::string> window;
  for (long n = -window_n; n <= window_n; ++n) {
    window.push_back(n == 0 ? "e" : "t" + std::to_string(n));
  }
  for (long n = -window_n; n <= window_n; ++n) {
    window.push_back(n == 0 ? "s" : "t" + std::to_string(n) + "s");
  }
  return window;
}

MultisetApprox to_uniform_multiset(const SimplexElement& beta, unsigned long denominator_cap) {
  const auto& weights = beta.weights();
  if (denominator_cap < weights.size()) {
    throw CapTooSmallError("denominator cap " + std::to_string(denominator_cap) +
                           " is below the support size " + std::to_string(weights.size()));
  }

  mpz_class lcm(1);
  for (const auto& [_, w] : weights) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den().get_mpz_t());
  }

  MultisetApprox out;
  out.multiset.group = beta.group_ptr();

  if (mpz_cmp_ui(lcm.get_mpz_t(), denominator_cap) <= 0) {
    // Exact expansion: weight p/L contributes p * (L/den) copies out of n = L.
    for (const auto& [key, w] : weights) {
      mpz_class count_z = w.get_num() * (lcm / w.get_den());
      const unsigned long count = count_z.get_ui();
      for (unsigned long c = 0; c < count; ++c) out.multiset.elems.push_back(key);
    }
    out.total_variation = Rat(0);
    out.exact = true;
    return out;
  }

  // Largest-remainder rounding into n = cap slots; each count is off by less
  // than one slot, so |beta - beta'|_1 < |supp| / cap.
  const unsigned long n = denominator_cap;
  struct Slot {
    const std::string* key;
    const Rat* weight;
    unsigned long count;
    Rat remainder;
  };
  std::vector<Slot> slots;
  slots.reserve(weights.size());
  unsigned long assigned = 0;
  for (const auto& [key, w] : weights) {
    Rat scaled = w * static_cast<long>(n);
    mpz_class floor_z = scaled.get_num() / scaled.get_den();
    unsigned long floor_count = floor_z.get_ui();
    slots.push_back({&key, &w, floor_count, Rat(scaled - Rat(floor_z))});
    assigned += floor_count;
  }
  unsigned long leftover = n - assigned;
  std::vector<std::size_t> order(slots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return slots[a].remainder > slots[b].remainder;
  });
  for (unsigned long i = 0; i < leftover; ++i) slots[order[i]].count += 1;

  out.total_variation = Rat(0);
  for (const auto& slot : slots) {
    Rat approx(static_cast<long>(slot.count), n);
    out.total_variation += rat_abs(approx - *slot.weight);
    for (unsigned long c = 0; c < slot.count; ++c) out.multiset.elems.push_back(*slot.key);
  }
  out.exact = out.total_variation == 0;
  return out;
}

std::pair<Rat, Assignment> matching_defect(const UniformMultiset& h, std::string_view g,
                                           std::string_view f, const MetricSpace& metric) {
  if (!h.group) throw ValidationError("multiset requires a group");
  if (h.elems.empty()) throw EmptySetError("multiset must have at least one element");
  const Group& group = *h.group;
  group.require_element(g);
  group.require_element(f);

  std::vector<std::size_t> xs, ys;
  xs.reserve(h.elems.size());
  ys.reserve(h.elems.size());
  for (const auto& hi : h.elems) {
    xs.push_back(metric.intern(group.multiply(hi, g)));
    ys.push_back(metric.intern(group.multiply(hi, f)));
  }
  auto [sigma, cost] = optimal_assignment(xs, ys, metric);
  Rat value = cost / Rat(static_cast<long>(h.elems.size()));
  return {std::move(value), std::move(sigma)};
}

long concentration_count(const UniformMultiset& h, std::string_view g, std::string_view f,
                         const Rat& threshold, const MetricSpace& metric) {
  if (threshold <= 0) throw ValidationError("threshold must be positive");
  auto [value, sigma] = matching_defect(h, g, f, metric);
  const Group& group = *h.group;
  long count = 0;
  for (std::size_t i = 0; i < h.elems.size(); ++i) {
    const std::size_t x = metric.intern(group.multiply(h.elems[i], g));
    const std::size_t y = metric.intern(group.multiply(h.elems[sigma.sigma[i]], f));
    if (metric.distance(x, y) >= threshold) ++count;
  }
  return count;
}

Rat dual_obstruction(const SimplexElement& beta, std::string_view g, std::string_view f,
                     const LipschitzWitness& witness,
                     std::shared_ptr<const MetricSpace> metric) {
  SignedMeasure lhs = as_signed_measure(translate(beta, g, Side::Right), metric);
  SignedMeasure rhs = as_signed_measure(translate(beta, f, Side::Right), metric);

  std::set<std::size_t> union_support;
  for (const auto& [point, _] : lhs.entries()) union_support.insert(point);
  for (const auto& [point, _] : rhs.entries()) union_support.insert(point);
  std::vector<std::size_t> points(union_support.begin(), union_support.end());
  if (!witness.lipschitz_on(points, *metric)) {
    throw WitnessError(
        "witness is not 1-Lipschitz (or not defined) on supp(beta g) U supp(beta f)");
  }

  Rat pairing(0);
  for (const auto& [point, mass] : (lhs - rhs).entries()) {
    pairing += mass * *witness.find(point);
  }
  return pairing;
}

CandidatePool pool_uniform_balls(std::shared_ptr<const Group> group,
                                 const std::vector<std::string>& generator_keys, long max_radius,
                                 long radius_cap) {
  if (max_radius < 1) throw ValidationError("ball pool needs max_radius >= 1");
  WordBall ball(group, generator_keys, std::max(radius_cap, max_radius));
  CandidatePool pool;
  for (long r = 1; r <= max_radius; ++r) {
    pool.candidates.emplace_back("ball(" + std::to_string(r) + ")",
                                 SimplexElement::uniform(group, ball.elements_within(r)));
  }
  return pool;
}

CandidatePool pool_dihedral_folner(std::shared_ptr<const Group> dihedral, long window_n,
                                   const std::vector<long>& ms) {
  CandidatePool pool;
  for (long m : ms) {
    pool.candidates.emplace_back("folner(" + std::to_string(m) + ")",
                                 dihedral_folner(dihedral, window_n, m));
  }
  return pool;
}

const char* minimize_outcome_name(MinimizeOutcome outcome) {
  switch (outcome) {
    case MinimizeOutcome::Success:
      return "success";
    case MinimizeOutcome::BudgetExhausted:
      return "budget-exhausted";
    case MinimizeOutcome::SupportCapExceeded:
      return "support-cap-exceeded";
  }
  return "unknown";
}

namespace {

// ||gamma g - gamma f|| for one candidate composition.
Rat score_candidate(const SimplexElement& gamma, const ProbeTask& task, const std::string& g,
                    const std::string& f) {
  SignedMeasure lhs = as_signed_measure(translate(gamma, g, Side::Right), task.metric);
  SignedMeasure rhs = as_signed_measure(translate(gamma, f, Side::Right), task.metric);
  return solve_transport(lhs - rhs).value;
}

}  // namespace

MinimizeResult sequential_minimize(const ProbeTask& task, const CandidatePool& pool,
                                   const MinimizeOptions& options) {
  if (pool.candidates.empty()) throw EmptySetError("candidate pool is empty");

  SimplexElement current = SimplexElement::dirac(task.group, task.group->identity());
  DefectReport report = defect(current, task, options.mode, options.exec);
  MinimizeResult result{MinimizeOutcome::BudgetExhausted, report, 0, {}};

  if (report.defect < task.epsilon) {
    result.outcome = MinimizeOutcome::Success;
    return result;
  }

  while (true) {
    // Worst pair of the current composition; first among ties.
    const PairDefect* worst = &report.pairs.front();
    for (const auto& pair : report.pairs) {
      if (pair.value > worst->value) worst = &pair;
    }

    std::size_t best_candidate = pool.candidates.size();
    Rat best_score;
    std::vector<SimplexElement> compositions;
    compositions.reserve(pool.candidates.size());
    for (std::size_t i = 0; i < pool.candidates.size(); ++i) {
      if (result.evaluations >= options.budget) {
        result.outcome = MinimizeOutcome::BudgetExhausted;
        return result;
      }
      SimplexElement gamma = convolve(pool.candidates[i].second, current);
      if (gamma.support_size() > options.max_support) {
        result.outcome = MinimizeOutcome::SupportCapExceeded;
        return result;
      }
      Rat score = score_candidate(gamma, task, worst->g, worst->f);
      ++result.evaluations;
      compositions.push_back(std::move(gamma));
      if (best_candidate == pool.candidates.size() || score < best_score) {
        best_candidate = i;
        best_score = std::move(score);
      }
    }

    current = std::move(compositions[best_candidate]);
    result.chosen.push_back(pool.candidates[best_candidate].first);
    report = defect(current, task, options.mode, options.exec);
    if (report.defect < result.best.defect) result.best = report;
    if (report.defect < task.epsilon) {
      result.best = std::move(report);
      result.outcome = MinimizeOutcome::Success;
      return result;
    }
  }
}

}  // namespace otg
