// Copyright 2026 The folint Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace folint {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Text did not match the polynomial / form grammar.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(format(position, expected, found)), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t pos, const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "syntax error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownVariable : public Error {
 public:
  UnknownVariable(std::string name, std::size_t position)
      : Error("unknown variable '" + name + "' at position " + std::to_string(position)),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// The two coefficients of a planar 1-form share a nonconstant factor.
class CoprimalityViolation : public Error {
 public:
  explicit CoprimalityViolation(std::string gcd_text)
      : Error("coefficients are not coprime: common factor " + gcd_text), gcd_(std::move(gcd_text)) {}
  const std::string& common_factor() const noexcept { return gcd_; }

 private:
  std::string gcd_;
};

/// An internal consistency check failed. Always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The form is proportional to dx (the field is c d/dy), which the analyses exclude.
class DegenerateField : public Error {
 public:
  using Error::Error;
};

class NotSingular : public Error {
 public:
  NotSingular() : Error("the origin is not a singular point of the form") {}
};

class ZeroDeterminant : public Error {
 public:
  ZeroDeterminant() : Error("determinant is zero") {}
};

/// Both coefficients vanish along a whole coordinate axis.
class InfiniteSingularLocus : public Error {
 public:
  using Error::Error;
};

/// A bounded computation (reduction depth) ended without a verdict.
class AnalysisUndecided : public Error {
 public:
  AnalysisUndecided(std::string what, int delta) : Error(std::move(what)), delta_(delta) {}
  int delta() const noexcept { return delta_; }

 private:
  int delta_;
};

}  // namespace folint
