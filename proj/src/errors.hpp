// Copyright 2026 The Matchstack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace matchstack {

// Malformed textual input (JSON, decimal strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index outside the current inner-face list or similar range violation.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Structurally invalid colored tree (bad label, duplicate sibling label).
class InvalidTreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation applied outside its stated domain (e.g. tree conversion of the
// base triangle, exponent of a zero coordinate, remainder found where a
// remainder-free tree is required).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance exceeds a brute-force guard; the caller asked for something the
// oracle refuses to attempt.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Name lookup failure (suite names, format names).
class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace matchstack
