// Copyright 2026 The Authors.
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

#ifndef VOLRIG_ERRORS_HPP_
#define VOLRIG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace volrig {

// A precondition on numeric or structural parameters was violated
// (k >= n, vertex out of range, d < k, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text (JSON complex, embedding, builtin selector) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A geometric construction needed an affinely independent point set.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator vanished modulo the chosen prime.
class BadPrimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matroid rank oracle answered inconsistently with the matroid axioms.
class OracleAuditError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace volrig

#endif  // VOLRIG_ERRORS_HPP_
