// Copyright 2026 The sunitary Authors
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

namespace sunitary {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (non-square, mismatched sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A matrix (or superoperator) that must be inverted is numerically singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// Choi matrix failed the positive-semidefinite test where one was required.
class NotPositiveError : public Error {
 public:
  using Error::Error;
};

// Inputs violate a relation the operation depends on, e.g. two Kraus sets
// that do not represent the same map, or T != V S V^*.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

class InvalidToleranceError : public Error {
 public:
  using Error::Error;
};

}  // namespace sunitary
