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

#ifndef OTGROUPS_TOML_LITE_HPP
#define OTGROUPS_TOML_LITE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otg {

/// Minimal TOML reader covering what probe configs need: [table.headers],
/// bare keys, "strings", integers, booleans, and flat arrays of strings or
/// integers. Comments start with '#'. Keys are flattened to dotted paths.
class TomlTable {
 public:
  static TomlTable parse(std::string_view text);
  static TomlTable parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<long> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_string_array(const std::string& key) const;
  std::optional<std::vector<long>> get_int_array(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  long get_int_or(const std::string& key, long fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;

  /// True when any key lives under the dotted prefix.
  bool has_table(const std::string& prefix) const;

  const std::map<std::string, std::string>& raw() const { return scalars_; }

 private:
  std::map<std::string, std::string> scalars_;  // dotted key -> raw scalar text
  std::map<std::string, std::vector<std::string>> arrays_;
  std::map<std::string, char> kinds_;  // 's' string, 'i' int, 'b' bool, 'a' array
};

}  // namespace otg

#endif  // OTGROUPS_TOML_LITE_HPP
