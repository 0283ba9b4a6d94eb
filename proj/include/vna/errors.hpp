// Copyright 2026 The vna Authors.
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

namespace vna {

// Base of every toolkit error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

class SingularS : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotFaithful : public Error {
 public:
  using Error::Error;
};

class NotPositive : public Error {
 public:
  using Error::Error;
};

class FlowLeavesAlgebra : public Error {
 public:
  FlowLeavesAlgebra(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

// Conditional expectation obstruction: no y in N reproduces e x e on H_N.
class NotCovariant : public Error {
 public:
  NotCovariant(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

// Derivation test and sampled-flow test disagree; numerical trouble.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class NotAProjection : public Error {
 public:
  NotAProjection(const std::string& what, std::size_t index)
      : Error(what), index(index) {}
  std::size_t index;
};

class NotCovariantInput : public Error {
 public:
  NotCovariantInput(const std::string& what, std::size_t index)
      : Error(what), index(index) {}
  std::size_t index;
};

class StrategyFailed : public Error {
 public:
  using Error::Error;
};

class Degenerate : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, const std::string& field)
      : Error(what + " (at " + field + ")"), field(field) {}
  std::string field;
};

class SchemaVersionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace vna
