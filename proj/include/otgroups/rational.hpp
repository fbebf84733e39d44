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

#ifndef OTGROUPS_RATIONAL_HPP
#define OTGROUPS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace otg {

/// Exact arbitrary-precision rational. Always kept in canonical form
/// (coprime numerator/denominator, positive denominator).
using Rat = mpq_class;

/// Parses "num/den" or plain "num" (optionally signed decimal integers).
/// Throws ParseError on malformed input or a zero denominator.
Rat rat_from_string(std::string_view text);

/// Renders a rational as "num/den", always with an explicit denominator
/// ("3" becomes "3/1"). Inverse of rat_from_string up to canonical form.
std::string rat_to_string(const Rat& value);

/// Nearest double, for display only.
double rat_to_double(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

}  // namespace otg

#endif  // OTGROUPS_RATIONAL_HPP
