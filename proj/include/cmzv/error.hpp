/* Copyright 2026 The cmzv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Error types shared by every module.

#ifndef CMZV_ERROR_HPP
#define CMZV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cmzv {

/// Malformed textual input: bad tokens, separators, out-of-range fields.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside an operation's domain (divergent index,
/// leading e^0, invalid derivation weight, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ModulusMismatch : public DomainError {
 public:
  ModulusMismatch(int expected, int got)
      : DomainError("modulus mismatch: expected N=" + std::to_string(expected) +
                    ", got N=" + std::to_string(got)) {}
};

}  // namespace cmzv

#endif  // CMZV_ERROR_HPP
