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

#ifndef OTGROUPS_METRIC_SPACE_HPP
#define OTGROUPS_METRIC_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "otgroups/parallel.hpp"
#include "otgroups/rational.hpp"

namespace otg {

/// An écart (pseudometric) on an ordered set of named points. Values are
/// immutable after construction; the only interior mutability is the
/// distance memo and, for open spaces, the lazily growing point list.
/// Both are safe for concurrent use.
class MetricSpace {
 public:
  virtual ~MetricSpace() = default;

  virtual std::size_t point_count() const = 0;
  virtual std::string point_at(std::size_t index) const = 0;
  virtual std::optional<std::size_t> try_index(std::string_view id) const = 0;

  /// Index of a known point. Throws UnknownPointError otherwise.
  std::size_t index_of(std::string_view id) const;

  /// Index of a point, admitting it first when the space is open.
  /// Closed spaces behave exactly like index_of. Lazy point enumeration
  /// is interior state, so this is const like the distance memo.
  virtual std::size_t intern(std::string_view id) const;

  /// Exact distance between two points by index.
  virtual Rat distance(std::size_t a, std::size_t b) const = 0;

  Rat distance_by_id(std::string_view a, std::string_view b) const;

  /// True when the point set may grow on demand (lazily enumerated spaces).
  virtual bool open() const { return false; }

  virtual std::string describe() const = 0;

  std::vector<std::string> point_ids() const;
};

/// Finite space backed by a full distance matrix.
class ExplicitMetricSpace final : public MetricSpace {
 public:
  ExplicitMetricSpace(std::vector<std::string> points, std::vector<std::vector<Rat>> matrix);

  std::size_t point_count() const override { return points_.size(); }
  std::string point_at(std::size_t index) const override;
  std::optional<std::size_t> try_index(std::string_view id) const override;
  Rat distance(std::size_t a, std::size_t b) const override;
  std::string describe() const override;

  const std::vector<std::vector<Rat>>& matrix() const { return matrix_; }

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Rat>> matrix_;
};

/// Space whose distances come from a callback, memoized per unordered pair.
/// When open, unknown points are admitted on first use and the point list
/// records them in interning order.
class OracleMetricSpace final : public MetricSpace {
 public:
  using DistanceFn = std::function<Rat(std::string_view, std::string_view)>;

  OracleMetricSpace(std::vector<std::string> initial_points, DistanceFn fn, bool open_points,
                    std::string description);

  std::size_t point_count() const override;
  std::string point_at(std::size_t index) const override;
  std::optional<std::size_t> try_index(std::string_view id) const override;
  std::size_t intern(std::string_view id) const override;
  Rat distance(std::size_t a, std::size_t b) const override;
  bool open() const override { return open_; }
  std::string describe() const override { return description_; }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::string> points_;  // stable under growth
  mutable std::unordered_map<std::string, std::size_t> index_;
  mutable std::unordered_map<std::uint64_t, Rat> memo_;
  DistanceFn fn_;
  bool open_;
  std::string description_;
};

/// One violated écart axiom with a witnessing point tuple.
struct MetricViolation {
  enum class Kind { NegativeDistance, NonzeroDiagonal, Asymmetry, TriangleInequality };
  Kind kind;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;  // only meaningful for TriangleInequality
  Rat lhs;            // offending value, e.g. d(x,z)
  Rat rhs;            // bound it violates, e.g. d(x,y)+d(y,z)
};

const char* metric_violation_kind_name(MetricViolation::Kind kind);

struct ValidationReport {
  std::vector<MetricViolation> violations;  // sorted by (kind, x, y, z)
  std::size_t negative_count = 0;
  std::size_t diagonal_count = 0;
  std::size_t asymmetry_count = 0;
  std::size_t triangle_count = 0;
  std::size_t probed_points = 0;
  bool truncated = false;  // witness list capped, counts are still exact

  bool clean() const { return violations.empty() && total_count() == 0; }
  std::size_t total_count() const {
    return negative_count + diagonal_count + asymmetry_count + triangle_count;
  }
};

struct ValidationOptions {
  Exec exec = Exec::Parallel;
  std::size_t max_witnesses_per_kind = 100;
};

/// Checks the écart axioms (zero diagonal, symmetry, triangle inequality,
/// nonnegativity) exhaustively over the space's current point set. Zero
/// distance between distinct points is allowed. Violations are report
/// content; this never throws on a bad metric.
ValidationReport validate_metric(const MetricSpace& space, const ValidationOptions& options = {});

/// Hausdorff distance between two non-empty finite subsets, by point index.
Rat hausdorff_distance(std::span<const std::size_t> a, std::span<const std::size_t> b,
                       const MetricSpace& space, Exec exec = Exec::Parallel);

/// Hausdorff distance between two non-empty finite subsets, by point id.
Rat hausdorff_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const MetricSpace& space, Exec exec = Exec::Parallel);

}  // namespace otg

#endif  // OTGROUPS_METRIC_SPACE_HPP
