// Copyright 2026 The schurpriv Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurpriv {

// Shape or ambient-dimension mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap (Kronecker products, exact graph search, ...) would be exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Bad index list, permutation, or otherwise malformed argument.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rejection of a candidate correlation matrix. `violation()` names the first
// property that failed, `row()`/`col()` locate it (0-based) when meaningful.
class ValidationError : public std::runtime_error {
 public:
  enum class Violation { kNotHermitian, kDiagonalNotOne, kNotPsd };

  ValidationError(Violation v, std::size_t row, std::size_t col,
                  const std::string& what)
      : std::runtime_error(what), violation_(v), row_(row), col_(col) {}

  Violation violation() const noexcept { return violation_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  Violation violation_;
  std::size_t row_;
  std::size_t col_;
};

const char* to_string(ValidationError::Violation v) noexcept;

// Kraus diagonals whose Gram matrix has C_kk != 1 (not trace preserving).
class NormalizationError : public std::runtime_error {
 public:
  NormalizationError(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// The span handed to the privacy checker has no usable unit (zero trace).
class DegenerateUnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A private code cannot be built: the correlation graph is connected.
class ObstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal numerical failure, e.g. an algebra closure that does not settle.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schurpriv
