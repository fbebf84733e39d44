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

#include "otgroups/json_io.hpp"

#include <fstream>
#include <map>

#include "otgroups/errors.hpp"

namespace otg {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected rational string \"num/den\" or integer, got " + j.dump());
}

Json rat_to_json(const Rat& value) { return rat_to_string(value); }

GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw ParseError("group descriptor requires a \"type\" field");
  }
  GroupSpec spec;
  spec.type = j.at("type").get<std::string>();
  if (spec.type == "Zk") {
    spec.k = j.value("k", 1);
  } else if (spec.type == "cyclic") {
    if (!j.contains("m")) throw ParseError("cyclic group descriptor requires \"m\"");
    spec.m = j.at("m").get<long>();
  } else if (spec.type == "dihedral_inf") {
    // no parameters
  } else if (spec.type == "product") {
    if (!j.contains("left") || !j.contains("right")) {
      throw ParseError("product group descriptor requires \"left\" and \"right\"");
    }
    spec.left = std::make_shared<GroupSpec>(group_spec_from_json(j.at("left")));
    spec.right = std::make_shared<GroupSpec>(group_spec_from_json(j.at("right")));
  } else {
    throw ParseError("unknown group type '" + spec.type + "'");
  }
  return spec;
}

Json group_spec_to_json(const GroupSpec& spec) {
  Json j;
  j["type"] = spec.type;
  if (spec.type == "Zk") j["k"] = spec.k;
  if (spec.type == "cyclic") j["m"] = spec.m;
  if (spec.type == "product") {
    j["left"] = group_spec_to_json(*spec.left);
    j["right"] = group_spec_to_json(*spec.right);
  }
  return j;
}

std::shared_ptr<MetricSpace> metric_space_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("metric space file must be a JSON object");

  if (j.contains("group")) {
    const std::string kind = j.value("metric", "word");
    if (kind != "word") {
      throw ParseError("group-backed metric must be \"word\", got '" + kind + "'");
    }
    auto group = make_group(group_spec_from_json(j.at("group")));
    long cap = j.value("radius_cap", kDefaultRadiusCap);
    std::vector<std::string> gens;
    if (j.contains("generators")) {
      for (const auto& word : j.at("generators")) {
        gens.push_back(parse_word(*group, word.get<std::string>()));
      }
    }
    return make_word_metric_space(group, std::move(gens), cap);
  }

  if (!j.contains("points") || !j.contains("matrix")) {
    throw ParseError("metric space file needs \"points\" and \"matrix\" (or \"group\")");
  }
  std::vector<std::string> points;
  for (const auto& p : j.at("points")) points.push_back(p.get<std::string>());
  std::vector<std::vector<Rat>> matrix;
  for (const auto& row : j.at("matrix")) {
    std::vector<Rat> r;
    for (const auto& cell : row) r.push_back(rat_from_json(cell));
    matrix.push_back(std::move(r));
  }
  return std::make_shared<ExplicitMetricSpace>(std::move(points), std::move(matrix));
}

Json metric_space_to_json(const MetricSpace& space) {
  Json j;
  const std::size_t n = space.point_count();
  Json points = Json::array();
  for (std::size_t i = 0; i < n; ++i) points.push_back(space.point_at(i));
  Json matrix = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(rat_to_json(space.distance(i, k)));
    matrix.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  j["matrix"] = std::move(matrix);
  return j;
}

SignedMeasure measure_from_json(const Json& j, std::shared_ptr<const MetricSpace> space) {
  if (!j.is_object() || !j.contains("entries")) {
    throw ParseError("measure file requires an \"entries\" array");
  }
  std::vector<std::pair<std::string, Rat>> entries;
  for (const auto& entry : j.at("entries")) {
    entries.emplace_back(entry.at("point").get<std::string>(), rat_from_json(entry.at("mass")));
  }
  return SignedMeasure::from_entries(std::move(space), entries);
}

Json measure_to_json(const SignedMeasure& measure) {
  Json entries = Json::array();
  for (const auto& [point, mass] : measure.entries()) {
    Json e;
    e["point"] = measure.space().point_at(point);
    e["mass"] = rat_to_json(mass);
    entries.push_back(std::move(e));
  }
  Json j;
  j["entries"] = std::move(entries);
  return j;
}

SimplexElement simplex_from_json(const Json& j, std::shared_ptr<const Group> group) {
  if (!j.is_object() || !j.contains("entries")) {
    throw ParseError("simplex file requires an \"entries\" array");
  }
  std::vector<std::pair<std::string, Rat>> weights;
  for (const auto& entry : j.at("entries")) {
    weights.emplace_back(entry.at("point").get<std::string>(), rat_from_json(entry.at("mass")));
  }
  return SimplexElement::from_weights(std::move(group), weights);
}

Json simplex_to_json(const SimplexElement& beta) {
  Json entries = Json::array();
  for (const auto& [key, weight] : beta.weights()) {
    Json e;
    e["point"] = key;
    e["mass"] = rat_to_json(weight);
    entries.push_back(std::move(e));
  }
  Json j;
  j["entries"] = std::move(entries);
  return j;
}

TransportPlan plan_from_json(const Json& j, const MetricSpace& space) {
  if (!j.is_object() || !j.contains("moves")) {
    throw ParseError("plan file requires a \"moves\" array");
  }
  TransportPlan plan;
  for (const auto& move : j.at("moves")) {
    plan.moves.push_back({space.intern(move.at("source").get<std::string>()),
                          space.intern(move.at("sink").get<std::string>()),
                          rat_from_json(move.at("mass"))});
  }
  return plan;
}

Json plan_to_json(const TransportPlan& plan, const MetricSpace& space) {
  Json moves = Json::array();
  for (const auto& move : plan.moves) {
    Json m;
    m["source"] = space.point_at(move.source);
    m["sink"] = space.point_at(move.sink);
    m["mass"] = rat_to_json(move.mass);
    moves.push_back(std::move(m));
  }
  Json j;
  j["moves"] = std::move(moves);
  return j;
}

LipschitzWitness witness_from_json(const Json& j, const MetricSpace& space) {
  if (!j.is_object() || !j.contains("values")) {
    throw ParseError("witness file requires a \"values\" array");
  }
  LipschitzWitness witness;
  for (const auto& entry : j.at("values")) {
    witness.values[space.intern(entry.at("point").get<std::string>())] =
        rat_from_json(entry.at("value"));
  }
  return witness;
}

Json witness_to_json(const LipschitzWitness& witness, const MetricSpace& space) {
  Json values = Json::array();
  for (const auto& [point, value] : witness.values) {
    Json v;
    v["point"] = space.point_at(point);
    v["value"] = rat_to_json(value);
    values.push_back(std::move(v));
  }
  Json j;
  j["values"] = std::move(values);
  return j;
}

FiniteAction action_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space")) {
    throw ParseError("action file requires a \"space\" object");
  }
  auto space = metric_space_from_json(j.at("space"));
  const std::size_t n = space->point_count();

  auto read_perm = [n](const Json& row) {
    Permutation p;
    for (const auto& image : row) {
      long v = image.get<long>();
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ParseError("permutation image index " + std::to_string(v) + " out of range");
      }
      p.push_back(static_cast<std::size_t>(v));
    }
    return p;
  };

  if (j.contains("permutations")) {
    std::vector<Permutation> perms;
    for (const auto& row : j.at("permutations")) perms.push_back(read_perm(row));
    return FiniteAction::from_permutations(std::move(space), std::move(perms));
  }

  if (j.contains("group") && j.contains("action")) {
    auto group = make_group(group_spec_from_json(j.at("group")));
    auto all = group->enumerate();
    if (!all) {
      throw ValidationError("action tables require a finite group; " + group->describe() +
                            " is not");
    }
    std::map<std::string, Permutation> table;
    for (const auto& [key, row] : j.at("action").items()) {
      group->require_element(key);
      table[key] = read_perm(row);
    }
    for (const auto& g : *all) {
      if (!table.count(g)) {
        throw ValidationError("action table is missing element '" + g + "'");
      }
    }
    // act(gh, x) = act(g, act(h, x)) and act(e, x) = x, exhaustively
    for (const auto& g : *all) {
      for (const auto& h : *all) {
        const Permutation& pg = table.at(g);
        const Permutation& ph = table.at(h);
        const Permutation& pgh = table.at(group->multiply(g, h));
        for (std::size_t x = 0; x < n; ++x) {
          if (pgh[x] != pg[ph[x]]) {
            throw ValidationError("action table violates act(gh, x) = act(g, act(h, x)) at g=" +
                                  g + ", h=" + h);
          }
        }
      }
    }
    const Permutation& pe = table.at(group->identity());
    for (std::size_t x = 0; x < n; ++x) {
      if (pe[x] != x) {
        throw ValidationError("action table must send the identity to the identity map");
      }
    }
    std::vector<Permutation> perms;
    perms.reserve(table.size());
    for (auto& [_, p] : table) perms.push_back(std::move(p));
    return FiniteAction::from_permutations(std::move(space), std::move(perms));
  }

  throw ParseError("action file needs \"permutations\" or \"group\" + \"action\"");
}

Json validation_report_to_json(const ValidationReport& report, const MetricSpace& space) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json entry;
    entry["kind"] = metric_violation_kind_name(v.kind);
    Json points = Json::array();
    points.push_back(space.point_at(v.x));
    points.push_back(space.point_at(v.y));
    if (v.kind == MetricViolation::Kind::TriangleInequality) {
      points.push_back(space.point_at(v.z));
    }
    entry["points"] = std::move(points);
    entry["lhs"] = rat_to_json(v.lhs);
    entry["rhs"] = rat_to_json(v.rhs);
    violations.push_back(std::move(entry));
  }
  Json j;
  j["clean"] = report.clean();
  j["probed_points"] = report.probed_points;
  j["violations"] = std::move(violations);
  j["counts"] = {{"negative", report.negative_count},
                 {"diagonal", report.diagonal_count},
                 {"asymmetry", report.asymmetry_count},
                 {"triangle", report.triangle_count}};
  j["truncated"] = report.truncated;
  return j;
}

}  // namespace otg
