/*
   Copyright 2026 The qlift Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLIFT_ERRORS_HPP
#define QLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlift {

/// Malformed input: wrong vector lengths, indices out of range, bad JSON shape.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic between scalars living in different cyclotomic fields.
class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The algebra would be larger than the configured dimension cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on arguments outside its contract
/// (non-unital functional, invalid presentation, non-cocycle twist, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A self-check of the engine failed. Seeing this means a bug, not bad input.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qlift

#endif  // QLIFT_ERRORS_HPP
