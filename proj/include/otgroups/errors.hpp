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

#ifndef OTGROUPS_ERRORS_HPP
#define OTGROUPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace otg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation requiring a mean-zero measure received one with nonzero total mass.
struct MeanNotZeroError : Error {
  using Error::Error;
};

/// A word-metric query walked past its radius cap without resolving.
struct RadiusExceededError : Error {
  RadiusExceededError(std::string element, long cap)
      : Error("word metric: distance of element '" + element + "' exceeds radius cap " +
              std::to_string(cap)),
        element(std::move(element)),
        radius_cap(cap) {}
  std::string element;
  long radius_cap;
};

/// Operands referencing different groups were mixed.
struct GroupMismatchError : Error {
  using Error::Error;
};

/// Operands referencing different metric spaces were mixed.
struct SpaceMismatchError : Error {
  using Error::Error;
};

/// A point identifier is not part of the (closed) metric space.
struct UnknownPointError : Error {
  using Error::Error;
};

/// An operation requiring a non-empty set received an empty one.
struct EmptySetError : Error {
  using Error::Error;
};

/// A length/dimension precondition was violated.
struct LengthMismatchError : Error {
  using Error::Error;
};

/// The denominator cap of a multiset expansion is too small.
struct CapTooSmallError : Error {
  using Error::Error;
};

/// A supplied Lipschitz witness is invalid on the required set.
struct WitnessError : Error {
  using Error::Error;
};

/// A structural validation failed (group axioms, action axioms, file contents).
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed input text (JSON, TOML, rationals, words).
struct ParseError : Error {
  using Error::Error;
};

/// Filesystem-level failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace otg

#endif  // OTGROUPS_ERRORS_HPP
