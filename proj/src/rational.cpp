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

#include "otgroups/rational.hpp"

#include <cctype>

#include "otgroups/errors.hpp"

namespace otg {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

}  // namespace otg
