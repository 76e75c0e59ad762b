// Copyright 2026 The mpsim Authors
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

namespace mpsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite entries handed to a decomposition.
class NumericInputError : public Error {
  public:
    using Error::Error;
};

/// A decomposition failed to converge.
class NumericFailure : public Error {
  public:
    using Error::Error;
};

/// Caller broke a documented precondition (e.g. unsorted singular values).
class ContractViolation : public Error {
  public:
    using Error::Error;
};

class ShapeError : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class IndexError : public Error {
  public:
    using Error::Error;
};

/// Invalid gate: non-unitary matrix, identical targets, wrong size.
class GateError : public Error {
  public:
    using Error::Error;
};

/// Request exceeds a size limit (dense conversion, user chi limit).
class CapacityError : public Error {
  public:
    using Error::Error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

class ObservableError : public Error {
  public:
    using Error::Error;
};

/// Circuit text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    std::size_t line() const noexcept {
        return line_;
    }

  private:
    std::size_t line_;
};

}  // namespace mpsim
