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

#include "otgroups/transport.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "otgroups/errors.hpp"

namespace otg {

namespace {

// Min-heap entry for Dijkstra over exact rational labels. Ties break on the
// node index so runs are deterministic.
struct QueueEntry {
  Rat dist;
  int node;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.dist != b.dist) return a.dist > b.dist;
    return a.node > b.node;
  }
};

}  // namespace

// Successive shortest augmenting paths with node potentials on the bipartite
// source/sink network spanned by supp(xi). Forward arcs (source, sink) carry
// cost d and infinite capacity; residual arcs appear as flow is placed. The
// potentials keep every reduced cost nonnegative, so each phase is a plain
// Dijkstra, and at termination they are an optimal dual solution. The public
// witness is the inf-convolution of the sink potentials, which is 1-Lipschitz
// on the whole support and pairs with xi to exactly the primal cost.
TransportSolution solve_transport(const SignedMeasure& xi) {
  if (!xi.mean_zero()) {
    throw MeanNotZeroError("transport requires a mean-zero measure, total mass is " +
                           rat_to_string(xi.total_mass()));
  }
  const MetricSpace& space = xi.space();

  std::vector<std::size_t> src_pt, snk_pt;
  std::vector<Rat> supply, demand;
  for (const auto& [point, mass] : xi.entries()) {
    if (mass > 0) {
      src_pt.push_back(point);
      supply.push_back(mass);
    } else {
      snk_pt.push_back(point);
      demand.push_back(-mass);
    }
  }
  const int m = static_cast<int>(src_pt.size());
  const int n = static_cast<int>(snk_pt.size());

  TransportSolution out;
  out.value = Rat(0);
  if (m == 0) return out;  // zero measure

  std::vector<std::vector<Rat>> cost(m, std::vector<Rat>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) cost[i][j] = space.distance(src_pt[i], snk_pt[j]);
  }

  std::vector<std::vector<Rat>> flow(m, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> res_supply = supply;
  std::vector<Rat> res_demand = demand;
  std::vector<Rat> pi(m + n, Rat(0));

  Rat remaining(0);
  for (const auto& s : supply) remaining += s;

  std::vector<Rat> dist(m + n);
  std::vector<char> reached(m + n);
  std::vector<int> parent(m + n);

  while (remaining > 0) {
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;
    std::vector<char> done(m + n, 0);
    for (int i = 0; i < m; ++i) {
      if (res_supply[i] > 0) {
        dist[i] = Rat(0);
        reached[i] = 1;
        queue.push({dist[i], i});
      }
    }
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (done[u] || d != dist[u]) continue;
      done[u] = 1;
      if (u < m) {
        for (int j = 0; j < n; ++j) {
          const int v = m + j;
          Rat cand = d + cost[u][j] + pi[u] - pi[v];
          if (!reached[v] || cand < dist[v]) {
            dist[v] = std::move(cand);
            reached[v] = 1;
            parent[v] = u;
            queue.push({dist[v], v});
          }
        }
      } else {
        const int j = u - m;
        for (int i = 0; i < m; ++i) {
          if (flow[i][j] == 0) continue;
          Rat cand = d - cost[i][j] + pi[u] - pi[i];
          if (!reached[i] || cand < dist[i]) {
            dist[i] = std::move(cand);
            reached[i] = 1;
            parent[i] = u;
            queue.push({dist[i], i});
          }
        }
      }
    }

    int target = -1;
    for (int j = 0; j < n; ++j) {
      if (res_demand[j] == 0) continue;
      const int v = m + j;
      if (!reached[v]) continue;
      if (target < 0 || dist[v] < dist[target]) target = v;
    }
    if (target < 0) {
      throw Error("internal: transport network has demand but no augmenting path");
    }
    const Rat reach = dist[target];
    for (int v = 0; v < m + n; ++v) {
      pi[v] += (reached[v] && dist[v] < reach) ? dist[v] : reach;
    }

    // Bottleneck along the augmenting path, then augment.
    Rat delta = res_demand[target - m];
    int v = target;
    while (parent[v] >= 0) {
      const int u = parent[v];
      if (u >= m) {
        // backward residual arc (sink u) -> (source v)
        const Rat& f = flow[v][u - m];
        if (f < delta) delta = f;
      }
      v = u;
    }
    if (res_supply[v] < delta) delta = res_supply[v];

    int w = target;
    while (parent[w] >= 0) {
      const int u = parent[w];
      if (u < m) {
        flow[u][w - m] += delta;
      } else {
        flow[w][u - m] -= delta;
      }
      w = u;
    }
    res_supply[w] -= delta;
    res_demand[target - m] -= delta;
    remaining -= delta;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (flow[i][j] > 0) {
        out.value += flow[i][j] * cost[i][j];
        out.plan.moves.push_back({src_pt[i], snk_pt[j], flow[i][j]});
      }
    }
  }

  // Dual witness: phi(z) = min over sinks y of (-pi[y] + d(z, y)), shifted so
  // the lexicographically least support id maps to zero.
  std::vector<std::size_t> support = xi.support();
  for (std::size_t z : support) {
    Rat best;
    bool have = false;
    for (int j = 0; j < n; ++j) {
      Rat cand = -pi[m + j] + space.distance(z, snk_pt[j]);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
    out.witness.values.emplace(z, std::move(best));
  }
  std::size_t anchor = support.front();
  std::string anchor_id = space.point_at(anchor);
  for (std::size_t z : support) {
    std::string id = space.point_at(z);
    if (id < anchor_id) {
      anchor = z;
      anchor_id = std::move(id);
    }
  }
  const Rat shift = out.witness.values.at(anchor);
  if (shift != 0) {
    for (auto& [_, value] : out.witness.values) value -= shift;
  }

  // Strong duality must close exactly; anything else is a solver defect.
  Rat pairing(0);
  for (const auto& [point, mass] : xi.entries()) pairing += mass * out.witness.values.at(point);
  if (pairing != out.value) {
    throw Error("internal: duality gap " + rat_to_string(out.value - pairing));
  }
  return out;
}

std::pair<Rat, TransportPlan> arens_eells_norm(const SignedMeasure& xi) {
  TransportSolution solution = solve_transport(xi);
  return {std::move(solution.value), std::move(solution.plan)};
}

std::pair<Rat, LipschitzWitness> kantorovich_dual(const SignedMeasure& xi) {
  TransportSolution solution = solve_transport(xi);
  return {std::move(solution.value), std::move(solution.witness)};
}

bool verify_certificate(const SignedMeasure& xi, const TransportPlan& plan,
                        const LipschitzWitness& witness) {
  const MetricSpace& space = xi.space();

  std::map<std::size_t, Rat> net;
  for (const auto& move : plan.moves) {
    if (move.mass <= 0) return false;
    const Rat* at_source = xi.find(move.source);
    const Rat* at_sink = xi.find(move.sink);
    if (at_source == nullptr || *at_source <= 0) return false;  // reduced form
    if (at_sink == nullptr || *at_sink >= 0) return false;
    net[move.source] += move.mass;
    net[move.sink] -= move.mass;
  }
  for (const auto& [point, mass] : xi.entries()) {
    auto it = net.find(point);
    if (it == net.end() || it->second != mass) return false;
  }
  if (net.size() != xi.entries().size()) return false;

  std::vector<std::size_t> support = xi.support();
  if (!witness.lipschitz_on(support, space)) return false;

  Rat pairing(0);
  for (const auto& [point, mass] : xi.entries()) {
    pairing += mass * *witness.find(point);
  }
  return plan.cost(space) == pairing;
}

WassersteinResult wasserstein(const SignedMeasure& mu, const SignedMeasure& nu) {
  if (!mu.nonnegative() || !nu.nonnegative()) {
    throw ValidationError("wasserstein requires nonnegative measures");
  }
  if (mu.total_mass() != nu.total_mass()) {
    throw ValidationError("wasserstein requires equal total masses, got " +
                          rat_to_string(mu.total_mass()) + " and " +
                          rat_to_string(nu.total_mass()));
  }
  TransportSolution solution = solve_transport(mu - nu);

  WassersteinResult result;
  result.value = std::move(solution.value);
  result.coupling = std::move(solution.plan);
  // Mass common to both marginals stays put.
  for (const auto& [point, mass] : mu.entries()) {
    const Rat* other = nu.find(point);
    if (other == nullptr) continue;
    result.coupling.moves.push_back({point, point, mass < *other ? mass : *other});
  }
  std::sort(result.coupling.moves.begin(), result.coupling.moves.end(),
            [](const TransportPlan::Move& a, const TransportPlan::Move& b) {
              return a.source != b.source ? a.source < b.source : a.sink < b.sink;
            });
  return result;
}

namespace {

// Dense O(n^3) Hungarian method. Returns the optimal value together with
// dual potentials (u, v) satisfying u[i] + v[j] <= a[i][j], tight on every
// arc some optimal matching uses.
struct HungarianResult {
  std::vector<int> match_col;  // row -> column
  std::vector<Rat> row_dual;
  std::vector<Rat> col_dual;
};

HungarianResult hungarian(const std::vector<std::vector<Rat>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> u(n + 1, Rat(0)), v(n + 1, Rat(0)), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<char> minv_set(n + 1, 0), used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      Rat delta;
      bool delta_set = false;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rat cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv_set[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          minv_set[j] = 1;
          way[j] = j0;
        }
        if (!delta_set || minv[j] < delta) {
          delta = minv[j];
          delta_set = true;
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv_set[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  HungarianResult result;
  result.match_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] != 0) result.match_col[p[j] - 1] = j - 1;
  }
  result.row_dual.assign(u.begin() + 1, u.end());
  result.col_dual.assign(v.begin() + 1, v.end());
  return result;
}

// Kuhn augmenting search restricted to rows >= first_row over allowed arcs.
bool try_augment(int row, int first_row, const std::vector<std::vector<char>>& allowed,
                 const std::vector<char>& col_banned, std::vector<int>& col_to_row,
                 std::vector<char>& visited) {
  const int n = static_cast<int>(allowed.size());
  for (int j = 0; j < n; ++j) {
    if (col_banned[j] || visited[j] || !allowed[row][j]) continue;
    visited[j] = 1;
    if (col_to_row[j] < 0 || (col_to_row[j] >= first_row &&
                              try_augment(col_to_row[j], first_row, allowed, col_banned,
                                          col_to_row, visited))) {
      col_to_row[j] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::pair<Assignment, Rat> optimal_assignment(const std::vector<std::size_t>& xs,
                                              const std::vector<std::size_t>& ys,
                                              const MetricSpace& space) {
  if (xs.size() != ys.size()) {
    throw LengthMismatchError("assignment requires equal-length lists, got " +
                              std::to_string(xs.size()) + " and " + std::to_string(ys.size()));
  }
  if (xs.empty()) {
    throw EmptySetError("assignment requires at least one point per side");
  }
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = space.distance(xs[i], ys[j]);
  }
  HungarianResult hr = hungarian(a);

  // Arcs tight against the optimal duals carry every optimal matching;
  // pick the lexicographically least one greedily, repairing the current
  // matching with one augmenting search per rejected candidate.
  std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      allowed[i][j] = a[i][j] == hr.row_dual[i] + hr.col_dual[j] ? 1 : 0;
    }
  }
  std::vector<int> col_to_row(n, -1);
  for (int i = 0; i < n; ++i) col_to_row[hr.match_col[i]] = i;
  std::vector<int> row_to_col = hr.match_col;
  std::vector<char> col_banned(n, 0);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (col_banned[j] || !allowed[i][j]) continue;
      if (row_to_col[i] == j) break;  // already lex-minimal for this row
      // Try rerouting the row currently holding column j.
      const int displaced = col_to_row[j];
      std::vector<int> backup_cols = col_to_row;
      std::vector<int> backup_rows = row_to_col;
      col_to_row[row_to_col[i]] = -1;
      col_to_row[j] = i;
      row_to_col[i] = j;
      bool ok = true;
      if (displaced >= 0) {
        std::vector<char> visited(n, 0);
        visited[j] = 1;
        ok = try_augment(displaced, i + 1, allowed, col_banned, col_to_row, visited);
        if (ok) {
          for (int jj = 0; jj < n; ++jj) {
            if (col_to_row[jj] >= 0) row_to_col[col_to_row[jj]] = jj;
          }
        }
      }
      if (ok) break;
      col_to_row = std::move(backup_cols);
      row_to_col = std::move(backup_rows);
    }
    col_banned[row_to_col[i]] = 1;
  }

  Assignment assignment;
  assignment.sigma.assign(n, 0);
  Rat total(0);
  for (int i = 0; i < n; ++i) {
    assignment.sigma[i] = static_cast<std::size_t>(row_to_col[i]);
    total += a[i][row_to_col[i]];
  }
  return {std::move(assignment), std::move(total)};
}

std::pair<Assignment, Rat> optimal_assignment(const std::vector<std::string>& xs,
                                              const std::vector<std::string>& ys,
                                              const MetricSpace& space) {
  std::vector<std::size_t> ix, iy;
  ix.reserve(xs.size());
  iy.reserve(ys.size());
  for (const auto& id : xs) ix.push_back(space.index_of(id));
  for (const auto& id : ys) iy.push_back(space.index_of(id));
  return optimal_assignment(ix, iy, space);
}

}  // namespace otg
