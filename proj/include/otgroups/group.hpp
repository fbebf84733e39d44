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

#ifndef OTGROUPS_GROUP_HPP
#define OTGROUPS_GROUP_HPP

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "otgroups/metric_space.hpp"
#include "otgroups/rational.hpp"

namespace otg {

inline constexpr long kDefaultRadiusCap = 64;

/// Serializable shape of a group, used for file formats and manifests.
struct GroupSpec {
  std::string type;  // "Zk" | "cyclic" | "dihedral_inf" | "product"
  long k = 0;        // Zk rank
  long m = 0;        // cyclic modulus
  std::shared_ptr<GroupSpec> left, right;  // product factors
};

/// A finitely generated group with concrete element arithmetic. Elements
/// are addressed by canonical normal-form keys (strings), injective on the
/// group, so they can double as sparse-map keys and point ids. Groups
/// beyond the built-ins plug in by implementing this interface.
class Group {
 public:
  virtual ~Group() = default;

  virtual const std::string& identity() const = 0;
  virtual std::string multiply(std::string_view a, std::string_view b) const = 0;
  virtual std::string inverse(std::string_view a) const = 0;

  /// Default generating set S as canonical keys (inverses are implied).
  virtual const std::vector<std::string>& generators() const = 0;
  /// Word tokens naming the generators, aligned with generators().
  virtual const std::vector<std::string>& generator_names() const = 0;

  /// True iff the key is the canonical normal form of a group element.
  virtual bool contains(std::string_view key) const = 0;

  /// All elements, for finite groups only.
  virtual std::optional<std::vector<std::string>> enumerate() const { return std::nullopt; }

  virtual std::string describe() const = 0;
  virtual GroupSpec spec() const = 0;

  /// contains() or throws ParseError naming the offending key.
  void require_element(std::string_view key) const;
};

std::shared_ptr<const Group> make_zk(long k);
std::shared_ptr<const Group> make_cyclic(long modulus);
std::shared_ptr<const Group> make_dihedral_inf();
std::shared_ptr<const Group> make_product(std::shared_ptr<const Group> left,
                                          std::shared_ptr<const Group> right);
std::shared_ptr<const Group> make_group(const GroupSpec& spec);

/// Evaluates a word in the generators: whitespace- or '*'-separated tokens,
/// each a generator name, optionally with an integer power ("t^-2") or a
/// trailing apostrophe for the inverse ("s'"). "e" is the identity and
/// "key:<normal form>" injects an element directly.
std::string parse_word(const Group& group, std::string_view word);

/// Breadth-first ball of the Cayley graph around the identity, grown lazily
/// and memoized. Word lengths are read off the ball; queries past the
/// radius cap throw RadiusExceededError instead of approximating.
class WordBall {
 public:
  WordBall(std::shared_ptr<const Group> group, std::vector<std::string> generator_keys,
           long radius_cap);

  /// Word length |g|_S. Throws RadiusExceededError past the cap.
  long length(std::string_view key) const;

  /// Word metric d_S(g, f) = |f^{-1} g|_S; left-invariant by construction.
  long distance(std::string_view g, std::string_view f) const;

  /// Elements with |g|_S <= radius in breadth-first discovery order.
  std::vector<std::string> elements_within(long radius) const;

  long radius_cap() const { return cap_; }
  const std::vector<std::string>& closed_generators() const { return gens_; }
  const Group& group() const { return *group_; }

 private:
  void grow_to(long radius) const;  // caller must hold mutex_

  std::shared_ptr<const Group> group_;
  std::vector<std::string> gens_;  // closed under inverses, deduplicated
  long cap_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, long> dist_;
  mutable std::vector<std::string> order_;  // discovery order
  mutable std::deque<std::string> frontier_;
  mutable long radius_ = 0;
  mutable bool exhausted_ = false;  // ball stopped growing (finite reach)
};

/// Least k with f^{-1} g a product of k generators or inverses.
/// Convenience wrapper; heavy users should hold a WordBall or a word-metric
/// space so the BFS ball is reused.
long word_metric(std::string_view g, std::string_view f, const Group& group,
                 long radius_cap = kDefaultRadiusCap);

/// Lazily enumerated metric space over group elements under the word metric
/// for the given generating set (defaults to the group's). Point set grows
/// as supports are encountered.
std::shared_ptr<MetricSpace> make_word_metric_space(std::shared_ptr<const Group> group,
                                                    std::vector<std::string> generator_keys = {},
                                                    long radius_cap = kDefaultRadiusCap);

/// Elements of the radius-r word ball in breadth-first order.
std::vector<std::string> word_ball(const Group& group, long radius,
                                   std::vector<std::string> generator_keys = {},
                                   long radius_cap = kDefaultRadiusCap);

}  // namespace otg

#endif  // OTGROUPS_GROUP_HPP
