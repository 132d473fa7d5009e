// Copyright 2026 The genlu Authors
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

#ifndef GENLU_ERRORS_HPP_
#define GENLU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace genlu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (non-square input, inner dimension mismatch).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

// Malformed matrix file. Row and column are 1-based; 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long row = 0, long col = 0)
      : Error(what), row_(row), col_(col) {}
  long row() const { return row_; }
  long col() const { return col_; }

 private:
  long row_;
  long col_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace genlu

#endif  // GENLU_ERRORS_HPP_
