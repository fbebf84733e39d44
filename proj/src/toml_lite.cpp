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

#include "otgroups/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "otgroups/errors.hpp"

namespace otg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

bool parse_integer(std::string_view s, long& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  try {
    out = std::stol(std::string(s));
  } catch (...) {
    return false;
  }
  return true;
}

std::string unquote(std::string_view s, int line_no) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
    throw ParseError("toml line " + std::to_string(line_no) + ": malformed string " +
                     std::string(s));
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '\\' && i + 2 < s.size()) {
      ++i;
      switch (s[i]) {
        case 'n':
          out += '\n';
          break;
        case 't':
          out += '\t';
          break;
        default:
          out += s[i];
      }
    } else {
      out += s[i];
    }
  }
  return out;
}

std::vector<std::string> split_array_items(std::string_view body, int line_no) {
  std::vector<std::string> items;
  bool in_string = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '"') in_string = !in_string;
    if (i == body.size() || (body[i] == ',' && !in_string)) {
      std::string_view item = trim(body.substr(start, i - start));
      if (!item.empty()) items.emplace_back(item);
      start = i + 1;
    }
  }
  if (in_string) {
    throw ParseError("toml line " + std::to_string(line_no) + ": unterminated string in array");
  }
  return items;
}

}  // namespace

TomlTable TomlTable::parse(std::string_view text) {
  TomlTable table;
  std::string prefix;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(strip_comment(text.substr(pos, eol - pos)));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError("toml line " + std::to_string(line_no) + ": malformed table header");
      }
      prefix = std::string(trim(line.substr(1, line.size() - 2)));
      if (prefix.empty()) {
        throw ParseError("toml line " + std::to_string(line_no) + ": empty table header");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("toml line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) {
      throw ParseError("toml line " + std::to_string(line_no) + ": empty key");
    }
    if (!prefix.empty()) key = prefix + "." + key;
    std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw ParseError("toml line " + std::to_string(line_no) + ": empty value for " + key);
    }

    if (value.front() == '[') {
      if (value.back() != ']') {
        throw ParseError("toml line " + std::to_string(line_no) +
                         ": arrays must close on the same line");
      }
      std::vector<std::string> items;
      for (const auto& raw : split_array_items(value.substr(1, value.size() - 2), line_no)) {
        if (!raw.empty() && raw.front() == '"') {
          items.push_back(unquote(raw, line_no));
        } else {
          long dummy;
          if (!parse_integer(raw, dummy)) {
            throw ParseError("toml line " + std::to_string(line_no) + ": bad array item '" +
                             raw + "'");
          }
          items.push_back(raw);
        }
      }
      table.arrays_[key] = std::move(items);
      table.kinds_[key] = 'a';
    } else if (value.front() == '"') {
      table.scalars_[key] = unquote(value, line_no);
      table.kinds_[key] = 's';
    } else if (value == "true" || value == "false") {
      table.scalars_[key] = std::string(value);
      table.kinds_[key] = 'b';
    } else {
      long parsed;
      if (!parse_integer(value, parsed)) {
        throw ParseError("toml line " + std::to_string(line_no) + ": unsupported value '" +
                         std::string(value) + "'");
      }
      table.scalars_[key] = std::to_string(parsed);
      table.kinds_[key] = 'i';
    }
  }
  return table;
}

TomlTable TomlTable::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool TomlTable::has(const std::string& key) const { return kinds_.count(key) > 0; }

std::optional<std::string> TomlTable::get_string(const std::string& key) const {
  auto kind = kinds_.find(key);
  if (kind == kinds_.end() || kind->second != 's') return std::nullopt;
  return scalars_.at(key);
}

std::optional<long> TomlTable::get_int(const std::string& key) const {
  auto kind = kinds_.find(key);
  if (kind == kinds_.end() || kind->second != 'i') return std::nullopt;
  return std::stol(scalars_.at(key));
}

std::optional<bool> TomlTable::get_bool(const std::string& key) const {
  auto kind = kinds_.find(key);
  if (kind == kinds_.end() || kind->second != 'b') return std::nullopt;
  return scalars_.at(key) == "true";
}

std::optional<std::vector<std::string>> TomlTable::get_string_array(
    const std::string& key) const {
  auto kind = kinds_.find(key);
  if (kind == kinds_.end() || kind->second != 'a') return std::nullopt;
  return arrays_.at(key);
}

std::optional<std::vector<long>> TomlTable::get_int_array(const std::string& key) const {
  auto strings = get_string_array(key);
  if (!strings) return std::nullopt;
  std::vector<long> values;
  values.reserve(strings->size());
  for (const auto& s : *strings) {
    long v;
    if (!parse_integer(s, v)) return std::nullopt;
    values.push_back(v);
  }
  return values;
}

std::string TomlTable::get_string_or(const std::string& key, const std::string& fallback) const {
  auto v = get_string(key);
  return v ? *v : fallback;
}

long TomlTable::get_int_or(const std::string& key, long fallback) const {
  auto v = get_int(key);
  return v ? *v : fallback;
}

bool TomlTable::get_bool_or(const std::string& key, bool fallback) const {
  auto v = get_bool(key);
  return v ? *v : fallback;
}

bool TomlTable::has_table(const std::string& prefix) const {
  const std::string dotted = prefix + ".";
  for (const auto& [key, _] : kinds_) {
    if (key.rfind(dotted, 0) == 0) return true;
  }
  return false;
}

}  // namespace otg
