// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQKD_ERRORS_HPP
#define SQKD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqkd {

/// Operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the domain of a function (negative probability,
/// probability outside [0, 1], unknown name, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An object fails its role check (unitarity, normalization, POVM
/// completeness).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction needs a nonsingular operator and did not get one.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqkd

#endif  // SQKD_ERRORS_HPP
