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

#ifndef OTGROUPS_JSON_IO_HPP
#define OTGROUPS_JSON_IO_HPP

#include <json.hpp>

#include <memory>
#include <string>

#include "otgroups/group.hpp"
#include "otgroups/measure.hpp"
#include "otgroups/metric_space.hpp"
#include "otgroups/quotient.hpp"
#include "otgroups/simplex.hpp"

namespace otg {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// Rationals serialize as "num/den" strings; integral JSON numbers are
/// accepted on input, floating point is rejected to keep files exact.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& value);

GroupSpec group_spec_from_json(const Json& j);
Json group_spec_to_json(const GroupSpec& spec);

/// Either { "points": [...], "matrix": [[...]] } or
/// { "group": <descriptor>, "metric": "word", "radius_cap"?, "generators"? }
/// where generators are words over the group's generator names.
std::shared_ptr<MetricSpace> metric_space_from_json(const Json& j);

/// Explicit (matrix) rendering of a space's current point set.
Json metric_space_to_json(const MetricSpace& space);

/// { "entries": [ { "point": id, "mass": "num/den" }, ... ] }
SignedMeasure measure_from_json(const Json& j, std::shared_ptr<const MetricSpace> space);
Json measure_to_json(const SignedMeasure& measure);

/// Same entry schema, with normal-form keys as points and simplex checks.
SimplexElement simplex_from_json(const Json& j, std::shared_ptr<const Group> group);
Json simplex_to_json(const SimplexElement& beta);

TransportPlan plan_from_json(const Json& j, const MetricSpace& space);
Json plan_to_json(const TransportPlan& plan, const MetricSpace& space);

LipschitzWitness witness_from_json(const Json& j, const MetricSpace& space);
Json witness_to_json(const LipschitzWitness& witness, const MetricSpace& space);

/// { "space": <metric space>, "permutations": [[image indices], ...] } or
/// { "space": <metric space>, "group": <descriptor>, "action": { key: [...] } }
/// (the group form requires a finite group and validates the homomorphism).
FiniteAction action_from_json(const Json& j);

Json validation_report_to_json(const ValidationReport& report, const MetricSpace& space);

}  // namespace otg

#endif  // OTGROUPS_JSON_IO_HPP
