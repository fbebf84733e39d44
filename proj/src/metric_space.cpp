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

#include "otgroups/metric_space.hpp"

#include <omp.h>

#include <algorithm>
#include <mutex>
#include <tuple>

#include "otgroups/errors.hpp"

namespace otg {

namespace {

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

std::size_t MetricSpace::index_of(std::string_view id) const {
  if (auto idx = try_index(id)) return *idx;
  throw UnknownPointError("unknown point '" + std::string(id) + "' in " + describe());
}

std::size_t MetricSpace::intern(std::string_view id) const { return index_of(id); }

Rat MetricSpace::distance_by_id(std::string_view a, std::string_view b) const {
  return distance(index_of(a), index_of(b));
}

std::vector<std::string> MetricSpace::point_ids() const {
  std::vector<std::string> ids;
  const std::size_t n = point_count();
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(point_at(i));
  return ids;
}

ExplicitMetricSpace::ExplicitMetricSpace(std::vector<std::string> points,
                                         std::vector<std::vector<Rat>> matrix)
    : points_(std::move(points)), matrix_(std::move(matrix)) {
  if (matrix_.size() != points_.size()) {
    throw ValidationError("metric matrix has " + std::to_string(matrix_.size()) +
                          " rows for " + std::to_string(points_.size()) + " points");
  }
  for (const auto& row : matrix_) {
    if (row.size() != points_.size()) {
      throw ValidationError("metric matrix is not square");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(points_[i], i).second) {
      throw ValidationError("duplicate point id '" + points_[i] + "'");
    }
  }
}

std::string ExplicitMetricSpace::point_at(std::size_t index) const { return points_.at(index); }

std::optional<std::size_t> ExplicitMetricSpace::try_index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rat ExplicitMetricSpace::distance(std::size_t a, std::size_t b) const {
  return matrix_.at(a).at(b);
}

std::string ExplicitMetricSpace::describe() const {
  return "explicit metric space (" + std::to_string(points_.size()) + " points)";
}

OracleMetricSpace::OracleMetricSpace(std::vector<std::string> initial_points, DistanceFn fn,
                                     bool open_points, std::string description)
    : fn_(std::move(fn)), open_(open_points), description_(std::move(description)) {
  for (auto& p : initial_points) {
    std::size_t idx = points_.size();
    if (!index_.emplace(p, idx).second) {
      throw ValidationError("duplicate point id '" + p + "'");
    }
    points_.push_back(std::move(p));
  }
}

std::size_t OracleMetricSpace::point_count() const {
  std::shared_lock lock(mutex_);
  return points_.size();
}

std::string OracleMetricSpace::point_at(std::size_t index) const {
  std::shared_lock lock(mutex_);
  if (index >= points_.size()) throw UnknownPointError("point index out of range");
  return points_[index];
}

std::optional<std::size_t> OracleMetricSpace::try_index(std::string_view id) const {
  std::shared_lock lock(mutex_);
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OracleMetricSpace::intern(std::string_view id) const {
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(std::string(id));
    if (it != index_.end()) return it->second;
  }
  if (!open_) {
    throw UnknownPointError("unknown point '" + std::string(id) + "' in " + description_);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = index_.emplace(std::string(id), points_.size());
  if (inserted) points_.emplace_back(it->first);
  return it->second;
}

Rat OracleMetricSpace::distance(std::size_t a, std::size_t b) const {
  if (a == b) return Rat(0);
  const std::uint64_t key = pair_key(a, b);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::string pa = point_at(a);
  std::string pb = point_at(b);
  Rat value = fn_(pa, pb);
  std::unique_lock lock(mutex_);
  // insert-if-absent; concurrent writers compute identical values
  memo_.emplace(key, value);
  return value;
}

const char* metric_violation_kind_name(MetricViolation::Kind kind) {
  switch (kind) {
    case MetricViolation::Kind::NegativeDistance:
      return "negative-distance";
    case MetricViolation::Kind::NonzeroDiagonal:
      return "nonzero-diagonal";
    case MetricViolation::Kind::Asymmetry:
      return "asymmetry";
    case MetricViolation::Kind::TriangleInequality:
      return "triangle-inequality";
  }
  return "unknown";
}

namespace {

bool violation_less(const MetricViolation& a, const MetricViolation& b) {
  return std::tie(a.kind, a.x, a.y, a.z) < std::tie(b.kind, b.x, b.y, b.z);
}

// Pairwise scan: diagonal, nonnegativity and symmetry in one O(n^2) pass.
void scan_pairs(const MetricSpace& space, std::size_t n, std::vector<MetricViolation>& out) {
  for (std::size_t i = 0; i < n; ++i) {
    Rat dii = space.distance(i, i);
    if (dii != 0) {
      out.push_back({MetricViolation::Kind::NonzeroDiagonal, i, i, 0, dii, Rat(0)});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat dij = space.distance(i, j);
      Rat dji = space.distance(j, i);
      if (dij < 0) {
        out.push_back({MetricViolation::Kind::NegativeDistance, i, j, 0, dij, Rat(0)});
      }
      if (dji < 0) {
        out.push_back({MetricViolation::Kind::NegativeDistance, j, i, 0, dji, Rat(0)});
      }
      if (dij != dji) {
        out.push_back({MetricViolation::Kind::Asymmetry, i, j, 0, dij, dji});
      }
    }
  }
}

void scan_triangles_serial(const MetricSpace& space, std::size_t n,
                           std::vector<MetricViolation>& out) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      Rat dxy = space.distance(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        Rat bound = dxy + space.distance(y, z);
        Rat dxz = space.distance(x, z);
        if (dxz > bound) {
          out.push_back({MetricViolation::Kind::TriangleInequality, x, y, z, dxz, bound});
        }
      }
    }
  }
}

void scan_triangles_parallel(const MetricSpace& space, std::size_t n,
                             std::vector<MetricViolation>& out) {
  std::vector<std::vector<MetricViolation>> partial(static_cast<std::size_t>(thread_limit()));
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (long xi = 0; xi < static_cast<long>(n); ++xi) {
    auto& local = partial[static_cast<std::size_t>(omp_in_parallel() ? omp_get_thread_num() : 0)];
    const auto x = static_cast<std::size_t>(xi);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      Rat dxy = space.distance(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        Rat bound = dxy + space.distance(y, z);
        Rat dxz = space.distance(x, z);
        if (dxz > bound) {
          local.push_back({MetricViolation::Kind::TriangleInequality, x, y, z, dxz, bound});
        }
      }
    }
  }
  for (auto& chunk : partial) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
}

}  // namespace

ValidationReport validate_metric(const MetricSpace& space, const ValidationOptions& options) {
  const std::size_t n = space.point_count();
  ValidationReport report;
  report.probed_points = n;

  std::vector<MetricViolation> all;
  scan_pairs(space, n, all);
  if (options.exec == Exec::Parallel && n >= 16) {
    scan_triangles_parallel(space, n, all);
  } else {
    scan_triangles_serial(space, n, all);
  }
  std::sort(all.begin(), all.end(), violation_less);

  std::size_t kept_per_kind[4] = {0, 0, 0, 0};
  for (auto& v : all) {
    std::size_t k = static_cast<std::size_t>(v.kind);
    switch (v.kind) {
      case MetricViolation::Kind::NegativeDistance:
        ++report.negative_count;
        break;
      case MetricViolation::Kind::NonzeroDiagonal:
        ++report.diagonal_count;
        break;
      case MetricViolation::Kind::Asymmetry:
        ++report.asymmetry_count;
        break;
      case MetricViolation::Kind::TriangleInequality:
        ++report.triangle_count;
        break;
    }
    if (kept_per_kind[k] < options.max_witnesses_per_kind) {
      report.violations.push_back(std::move(v));
      ++kept_per_kind[k];
    } else {
      report.truncated = true;
    }
  }
  return report;
}

namespace {

Rat directed_hausdorff(std::span<const std::size_t> from, std::span<const std::size_t> to,
                       const MetricSpace& space) {
  Rat worst(0);
  for (std::size_t a : from) {
    Rat best = space.distance(a, to[0]);
    for (std::size_t k = 1; k < to.size(); ++k) {
      Rat d = space.distance(a, to[k]);
      if (d < best) best = std::move(d);
    }
    if (best > worst) worst = std::move(best);
  }
  return worst;
}

Rat directed_hausdorff_parallel(std::span<const std::size_t> from, std::span<const std::size_t> to,
                                const MetricSpace& space) {
  std::vector<Rat> minima(from.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (long i = 0; i < static_cast<long>(from.size()); ++i) {
    Rat best = space.distance(from[static_cast<std::size_t>(i)], to[0]);
    for (std::size_t k = 1; k < to.size(); ++k) {
      Rat d = space.distance(from[static_cast<std::size_t>(i)], to[k]);
      if (d < best) best = std::move(d);
    }
    minima[static_cast<std::size_t>(i)] = std::move(best);
  }
  Rat worst(0);
  for (auto& m : minima) {
    if (m > worst) worst = std::move(m);
  }
  return worst;
}

}  // namespace

Rat hausdorff_distance(std::span<const std::size_t> a, std::span<const std::size_t> b,
                       const MetricSpace& space, Exec exec) {
  if (a.empty() || b.empty()) {
    throw EmptySetError("hausdorff distance requires non-empty sets");
  }
  const bool parallel = exec == Exec::Parallel && a.size() + b.size() >= 64;
  Rat ab = parallel ? directed_hausdorff_parallel(a, b, space) : directed_hausdorff(a, b, space);
  Rat ba = parallel ? directed_hausdorff_parallel(b, a, space) : directed_hausdorff(b, a, space);
  return ab > ba ? ab : ba;
}

Rat hausdorff_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const MetricSpace& space, Exec exec) {
  std::vector<std::size_t> ia, ib;
  ia.reserve(a.size());
  ib.reserve(b.size());
  for (const auto& id : a) ia.push_back(space.index_of(id));
  for (const auto& id : b) ib.push_back(space.index_of(id));
  return hausdorff_distance(std::span<const std::size_t>(ia), std::span<const std::size_t>(ib),
                            space, exec);
}

}  // namespace otg
