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

#include "otgroups/measure.hpp"

#include "otgroups/errors.hpp"

namespace otg {

SignedMeasure::SignedMeasure(std::shared_ptr<const MetricSpace> space)
    : space_(std::move(space)) {
  if (!space_) throw ValidationError("measure requires a metric space");
}

SignedMeasure SignedMeasure::from_entries(
    std::shared_ptr<const MetricSpace> space,
    const std::vector<std::pair<std::string, Rat>>& entries) {
  SignedMeasure m(std::move(space));
  for (const auto& [id, mass] : entries) {
    m.add(m.space_->intern(id), mass);
  }
  return m;
}

void SignedMeasure::add(std::size_t point, const Rat& mass) {
  if (mass == 0) return;
  auto [it, inserted] = entries_.emplace(point, mass);
  if (!inserted) {
    it->second += mass;
    if (it->second == 0) entries_.erase(it);
  }
}

Rat SignedMeasure::total_mass() const {
  Rat total(0);
  for (const auto& [_, mass] : entries_) total += mass;
  return total;
}

bool SignedMeasure::nonnegative() const {
  for (const auto& [_, mass] : entries_) {
    if (mass < 0) return false;
  }
  return true;
}

std::vector<std::size_t> SignedMeasure::support() const {
  std::vector<std::size_t> points;
  points.reserve(entries_.size());
  for (const auto& [point, _] : entries_) points.push_back(point);
  return points;
}

const Rat* SignedMeasure::find(std::size_t point) const {
  auto it = entries_.find(point);
  return it == entries_.end() ? nullptr : &it->second;
}

void SignedMeasure::require_same_space(const SignedMeasure& other) const {
  if (space_ != other.space_) {
    throw SpaceMismatchError("measures live on different metric spaces");
  }
}

SignedMeasure SignedMeasure::operator+(const SignedMeasure& other) const {
  require_same_space(other);
  SignedMeasure result(*this);
  for (const auto& [point, mass] : other.entries_) result.add(point, mass);
  return result;
}

SignedMeasure SignedMeasure::operator-(const SignedMeasure& other) const {
  require_same_space(other);
  SignedMeasure result(*this);
  for (const auto& [point, mass] : other.entries_) result.add(point, Rat(-mass));
  return result;
}

SignedMeasure SignedMeasure::scaled(const Rat& c) const {
  SignedMeasure result(space_);
  if (c == 0) return result;
  for (const auto& [point, mass] : entries_) result.entries_.emplace(point, Rat(mass * c));
  return result;
}

bool SignedMeasure::operator==(const SignedMeasure& other) const {
  return space_ == other.space_ && entries_ == other.entries_;
}

Rat TransportPlan::cost(const MetricSpace& space) const {
  Rat total(0);
  for (const auto& move : moves) total += move.mass * space.distance(move.source, move.sink);
  return total;
}

const Rat* LipschitzWitness::find(std::size_t point) const {
  auto it = values.find(point);
  return it == values.end() ? nullptr : &it->second;
}

bool LipschitzWitness::lipschitz_on(const std::vector<std::size_t>& points,
                                    const MetricSpace& space) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rat* vi = find(points[i]);
    if (vi == nullptr) return false;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rat* vj = find(points[j]);
      if (vj == nullptr) return false;
      Rat gap = *vi - *vj;
      if (gap < 0) gap = -gap;
      if (gap > space.distance(points[i], points[j])) return false;
    }
  }
  return true;
}

}  // namespace otg
