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

#include "otgroups/group.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "otgroups/errors.hpp"

namespace otg {

namespace {

// Canonical integer token: optional minus, digits, no leading zeros, no "-0".
bool parse_canonical_int(std::string_view text, long long& out) {
  if (text.empty()) return false;
  const bool negative = text[0] == '-';
  std::string_view digits = negative ? text.substr(1) : text;
  if (digits.empty()) return false;
  if (digits.size() > 1 && digits[0] == '0') return false;
  if (negative && digits == "0") return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return false;
  if (negative) out = -out;
  return true;
}

std::string int_key(long long v) { return std::to_string(v); }

class ZkGroup final : public Group {
 public:
  explicit ZkGroup(long k) : k_(k) {
    if (k < 1) throw ValidationError("Zk rank must be at least 1");
    std::string zero;
    for (long i = 0; i < k_; ++i) {
      if (i) zero += ',';
      zero += '0';
    }
    identity_ = zero;
    for (long i = 0; i < k_; ++i) {
      std::vector<long long> e(k_, 0);
      e[i] = 1;
      generators_.push_back(vector_key(e));
      names_.push_back("x" + std::to_string(i + 1));
    }
  }

  const std::string& identity() const override { return identity_; }

  std::string multiply(std::string_view a, std::string_view b) const override {
    auto va = parse(a), vb = parse(b);
    for (long i = 0; i < k_; ++i) va[i] += vb[i];
    return vector_key(va);
  }

  std::string inverse(std::string_view a) const override {
    auto va = parse(a);
    for (auto& c : va) c = -c;
    return vector_key(va);
  }

  const std::vector<std::string>& generators() const override { return generators_; }
  const std::vector<std::string>& generator_names() const override { return names_; }

  bool contains(std::string_view key) const override {
    long long dummy;
    long count = 0;
    while (true) {
      auto comma = key.find(',');
      std::string_view head = comma == std::string_view::npos ? key : key.substr(0, comma);
      if (!parse_canonical_int(head, dummy)) return false;
      ++count;
      if (comma == std::string_view::npos) break;
      key.remove_prefix(comma + 1);
    }
    return count == k_;
  }

  std::string describe() const override { return k_ == 1 ? "Z" : "Z^" + std::to_string(k_); }

  GroupSpec spec() const override {
    GroupSpec s;
    s.type = "Zk";
    s.k = k_;
    return s;
  }

 private:
  std::vector<long long> parse(std::string_view key) const {
    std::vector<long long> v;
    v.reserve(k_);
    while (true) {
      auto comma = key.find(',');
      std::string_view head = comma == std::string_view::npos ? key : key.substr(0, comma);
      long long value;
      if (!parse_canonical_int(head, value)) {
        throw ParseError("malformed Z^k element '" + std::string(key) + "'");
      }
      v.push_back(value);
      if (comma == std::string_view::npos) break;
      key.remove_prefix(comma + 1);
    }
    if (static_cast<long>(v.size()) != k_) {
      throw ParseError("Z^k element has wrong arity: '" + std::string(key) + "'");
    }
    return v;
  }

  static std::string vector_key(const std::vector<long long>& v) {
    std::string key;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) key += ',';
      key += int_key(v[i]);
    }
    return key;
  }

  long k_;
  std::string identity_;
  std::vector<std::string> generators_;
  std::vector<std::string> names_;
};

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(long m) : m_(m) {
    if (m < 1) throw ValidationError("cyclic modulus must be at least 1");
    identity_ = "0";
    if (m_ > 1) {
      generators_.push_back("1");
      names_.push_back("g");
    }
  }

  const std::string& identity() const override { return identity_; }

  std::string multiply(std::string_view a, std::string_view b) const override {
    return int_key((parse(a) + parse(b)) % m_);
  }

  std::string inverse(std::string_view a) const override {
    return int_key((m_ - parse(a)) % m_);
  }

  const std::vector<std::string>& generators() const override { return generators_; }
  const std::vector<std::string>& generator_names() const override { return names_; }

  bool contains(std::string_view key) const override {
    long long v;
    return parse_canonical_int(key, v) && v >= 0 && v < m_;
  }

  std::optional<std::vector<std::string>> enumerate() const override {
    std::vector<std::string> all;
    all.reserve(m_);
    for (long r = 0; r < m_; ++r) all.push_back(int_key(r));
    return all;
  }

  std::string describe() const override { return "Z/" + std::to_string(m_); }

  GroupSpec spec() const override {
    GroupSpec s;
    s.type = "cyclic";
    s.m = m_;
    return s;
  }

 private:
  long long parse(std::string_view key) const {
    long long v;
    if (!parse_canonical_int(key, v) || v < 0 || v >= m_) {
      throw ParseError("malformed Z/" + std::to_string(m_) + " element '" + std::string(key) +
                       "'");
    }
    return v;
  }

  long m_;
  std::string identity_;
  std::vector<std::string> generators_;
  std::vector<std::string> names_;
};

// Normal form t^n s^b with relations s t = t^{-1} s and s^2 = 1, so
// (n, b)(m, c) = (n + (-1)^b m, b xor c). Keys: "e", "t<n>", "s", "t<n>s".
class DihedralInfGroup final : public Group {
 public:
  DihedralInfGroup() {
    identity_ = "e";
    generators_ = {"t1", "s"};
    names_ = {"t", "s"};
  }

  const std::string& identity() const override { return identity_; }

  std::string multiply(std::string_view a, std::string_view b) const override {
    auto [n, sb] = parse(a);
    auto [m, tb] = parse(b);
    return key(n + (sb ? -m : m), sb ^ tb);
  }

  std::string inverse(std::string_view a) const override {
    auto [n, sb] = parse(a);
    return sb ? key(n, true) : key(-n, false);
  }

  const std::vector<std::string>& generators() const override { return generators_; }
  const std::vector<std::string>& generator_names() const override { return names_; }

  bool contains(std::string_view k) const override {
    if (k == "e" || k == "s") return true;
    if (k.empty() || k[0] != 't') return false;
    k.remove_prefix(1);
    if (!k.empty() && k.back() == 's') k.remove_suffix(1);
    long long n;
    return parse_canonical_int(k, n) && n != 0;
  }

  std::string describe() const override { return "D_inf"; }

  GroupSpec spec() const override {
    GroupSpec s;
    s.type = "dihedral_inf";
    return s;
  }

  static std::string key(long long n, bool flip) {
    if (n == 0) return flip ? "s" : "e";
    return "t" + int_key(n) + (flip ? "s" : "");
  }

  static std::pair<long long, bool> parse(std::string_view k) {
    if (k == "e") return {0, false};
    if (k == "s") return {0, true};
    if (!k.empty() && k[0] == 't') {
      std::string_view body = k.substr(1);
      bool flip = false;
      if (!body.empty() && body.back() == 's') {
        flip = true;
        body.remove_suffix(1);
      }
      long long n;
      if (parse_canonical_int(body, n) && n != 0) return {n, flip};
    }
    throw ParseError("malformed D_inf element '" + std::string(k) + "'");
  }

 private:
  std::string identity_;
  std::vector<std::string> generators_;
  std::vector<std::string> names_;
};

// Keys "(left|right)"; the separator is the unique '|' at parenthesis
// depth zero, so product keys nest.
class ProductGroup final : public Group {
 public:
  ProductGroup(std::shared_ptr<const Group> left, std::shared_ptr<const Group> right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw ValidationError("product group requires two factors");
    identity_ = key(left_->identity(), right_->identity());
    for (std::size_t i = 0; i < left_->generators().size(); ++i) {
      generators_.push_back(key(left_->generators()[i], right_->identity()));
      names_.push_back("l." + left_->generator_names()[i]);
    }
    for (std::size_t i = 0; i < right_->generators().size(); ++i) {
      generators_.push_back(key(left_->identity(), right_->generators()[i]));
      names_.push_back("r." + right_->generator_names()[i]);
    }
  }

  const std::string& identity() const override { return identity_; }

  std::string multiply(std::string_view a, std::string_view b) const override {
    auto [al, ar] = split(a);
    auto [bl, br] = split(b);
    return key(left_->multiply(al, bl), right_->multiply(ar, br));
  }

  std::string inverse(std::string_view a) const override {
    auto [al, ar] = split(a);
    return key(left_->inverse(al), right_->inverse(ar));
  }

  const std::vector<std::string>& generators() const override { return generators_; }
  const std::vector<std::string>& generator_names() const override { return names_; }

  bool contains(std::string_view k) const override {
    try {
      auto [l, r] = split(k);
      return left_->contains(l) && right_->contains(r);
    } catch (const ParseError&) {
      return false;
    }
  }

  std::optional<std::vector<std::string>> enumerate() const override {
    auto ls = left_->enumerate();
    auto rs = right_->enumerate();
    if (!ls || !rs) return std::nullopt;
    std::vector<std::string> all;
    all.reserve(ls->size() * rs->size());
    for (const auto& l : *ls) {
      for (const auto& r : *rs) all.push_back(key(l, r));
    }
    return all;
  }

  std::string describe() const override {
    return left_->describe() + " x " + right_->describe();
  }

  GroupSpec spec() const override {
    GroupSpec s;
    s.type = "product";
    s.left = std::make_shared<GroupSpec>(left_->spec());
    s.right = std::make_shared<GroupSpec>(right_->spec());
    return s;
  }

 private:
  static std::string key(std::string_view l, std::string_view r) {
    std::string k = "(";
    k += l;
    k += '|';
    k += r;
    k += ')';
    return k;
  }

  static std::pair<std::string_view, std::string_view> split(std::string_view k) {
    if (k.size() < 3 || k.front() != '(' || k.back() != ')') {
      throw ParseError("malformed product element '" + std::string(k) + "'");
    }
    std::string_view body = k.substr(1, k.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == '|' && depth == 0) {
        return {body.substr(0, i), body.substr(i + 1)};
      }
    }
    throw ParseError("malformed product element '" + std::string(k) + "'");
  }

  std::shared_ptr<const Group> left_, right_;
  std::string identity_;
  std::vector<std::string> generators_;
  std::vector<std::string> names_;
};

}  // namespace

void Group::require_element(std::string_view key) const {
  if (!contains(key)) {
    throw ParseError("'" + std::string(key) + "' is not a canonical element of " + describe());
  }
}

std::shared_ptr<const Group> make_zk(long k) { return std::make_shared<ZkGroup>(k); }

std::shared_ptr<const Group> make_cyclic(long modulus) {
  return std::make_shared<CyclicGroup>(modulus);
}

std::shared_ptr<const Group> make_dihedral_inf() { return std::make_shared<DihedralInfGroup>(); }

std::shared_ptr<const Group> make_product(std::shared_ptr<const Group> left,
                                          std::shared_ptr<const Group> right) {
  return std::make_shared<ProductGroup>(std::move(left), std::move(right));
}

std::shared_ptr<const Group> make_group(const GroupSpec& spec) {
  if (spec.type == "Zk") return make_zk(spec.k);
  if (spec.type == "cyclic") return make_cyclic(spec.m);
  if (spec.type == "dihedral_inf") return make_dihedral_inf();
  if (spec.type == "product") {
    if (!spec.left || !spec.right) {
      throw ValidationError("product group spec requires left and right factors");
    }
    return make_product(make_group(*spec.left), make_group(*spec.right));
  }
  throw ValidationError("unknown group type '" + spec.type + "'");
}

std::string parse_word(const Group& group, std::string_view word) {
  std::string result = group.identity();
  std::size_t pos = 0;
  auto next_token = [&]() -> std::optional<std::string_view> {
    while (pos < word.size() && (word[pos] == ' ' || word[pos] == '\t' || word[pos] == '*')) {
      ++pos;
    }
    if (pos >= word.size()) return std::nullopt;
    std::size_t start = pos;
    while (pos < word.size() && word[pos] != ' ' && word[pos] != '\t' && word[pos] != '*') {
      ++pos;
    }
    return word.substr(start, pos - start);
  };

  while (auto token_opt = next_token()) {
    std::string_view token = *token_opt;
    if (token == "e") continue;
    if (token.starts_with("key:")) {
      std::string_view key = token.substr(4);
      group.require_element(key);
      result = group.multiply(result, key);
      continue;
    }
    long long power = 1;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      if (!parse_canonical_int(token.substr(caret + 1), power)) {
        throw ParseError("malformed power in word token '" + std::string(token) + "'");
      }
    } else if (token.ends_with("'")) {
      name = token.substr(0, token.size() - 1);
      power = -1;
    }
    const auto& names = group.generator_names();
    auto it = std::find(names.begin(), names.end(), std::string(name));
    if (it == names.end()) {
      throw ParseError("unknown generator '" + std::string(name) + "' in word (group " +
                       group.describe() + ")");
    }
    std::string gen = group.generators()[static_cast<std::size_t>(it - names.begin())];
    if (power < 0) {
      gen = group.inverse(gen);
      power = -power;
    }
    for (long long i = 0; i < power; ++i) result = group.multiply(result, gen);
  }
  return result;
}

WordBall::WordBall(std::shared_ptr<const Group> group, std::vector<std::string> generator_keys,
                   long radius_cap)
    : group_(std::move(group)), cap_(radius_cap) {
  if (!group_) throw ValidationError("word ball requires a group");
  if (cap_ < 1) throw ValidationError("radius cap must be at least 1");
  if (generator_keys.empty()) generator_keys = group_->generators();
  std::unordered_set<std::string> seen;
  for (const auto& g : generator_keys) {
    group_->require_element(g);
    if (seen.insert(g).second) gens_.push_back(g);
  }
  for (std::size_t i = 0, end = gens_.size(); i < end; ++i) {
    std::string inv = group_->inverse(gens_[i]);
    if (seen.insert(inv).second) gens_.push_back(std::move(inv));
  }
  dist_.emplace(group_->identity(), 0);
  order_.push_back(group_->identity());
  frontier_.push_back(group_->identity());
}

void WordBall::grow_to(long radius) const {
  while (radius_ < radius && !exhausted_) {
    std::deque<std::string> next;
    for (const auto& g : frontier_) {
      for (const auto& s : gens_) {
        std::string h = group_->multiply(g, s);
        if (dist_.emplace(h, radius_ + 1).second) {
          order_.push_back(h);
          next.push_back(std::move(h));
        }
      }
    }
    frontier_ = std::move(next);
    ++radius_;
    if (frontier_.empty()) exhausted_ = true;
  }
}

long WordBall::length(std::string_view key) const {
  group_->require_element(key);
  std::string k(key);
  std::lock_guard lock(mutex_);
  while (true) {
    if (auto it = dist_.find(k); it != dist_.end()) return it->second;
    if (exhausted_) {
      throw ValidationError("element '" + k + "' is not generated by the chosen set in " +
                            group_->describe());
    }
    if (radius_ >= cap_) throw RadiusExceededError(k, cap_);
    grow_to(radius_ + 1);
  }
}

long WordBall::distance(std::string_view g, std::string_view f) const {
  return length(group_->multiply(group_->inverse(f), g));
}

std::vector<std::string> WordBall::elements_within(long radius) const {
  std::lock_guard lock(mutex_);
  if (radius > cap_) throw RadiusExceededError("ball radius " + std::to_string(radius), cap_);
  grow_to(radius);
  std::vector<std::string> out;
  for (const auto& k : order_) {
    if (dist_.at(k) <= radius) out.push_back(k);
  }
  return out;
}

long word_metric(std::string_view g, std::string_view f, const Group& group, long radius_cap) {
  // single-shot convenience: builds a throwaway ball
  auto self = std::shared_ptr<const Group>(&group, [](const Group*) {});
  WordBall ball(self, {}, radius_cap);
  return ball.distance(g, f);
}

std::shared_ptr<MetricSpace> make_word_metric_space(std::shared_ptr<const Group> group,
                                                    std::vector<std::string> generator_keys,
                                                    long radius_cap) {
  auto ball = std::make_shared<WordBall>(group, std::move(generator_keys), radius_cap);
  std::string description = "word metric on " + group->describe();
  return std::make_shared<OracleMetricSpace>(
      std::vector<std::string>{},
      [ball](std::string_view a, std::string_view b) { return Rat(ball->distance(a, b)); },
      /*open_points=*/true, description);
}

std::vector<std::string> word_ball(const Group& group, long radius,
                                   std::vector<std::string> generator_keys, long radius_cap) {
  auto self = std::shared_ptr<const Group>(&group, [](const Group*) {});
  WordBall ball(self, std::move(generator_keys), std::max(radius_cap, radius));
  return ball.elements_within(radius);
}

}  // namespace otg
