// Copyright 2026 The embedsim Authors
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

#include <stdexcept>
#include <string>

namespace embedsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand sizes do not agree (string length vs. qubit count, etc.).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Request exceeds a fixed size limit, e.g. dense matrices past `kDenseLimit`.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class NotHermitianError : public Error {
  public:
    using Error::Error;
};

/// Raised by `unembed_state` when the input cannot be the image of a unit state.
class NotAnEmbeddingError : public Error {
  public:
    using Error::Error;
};

/// A consistency check inside the library failed; indicates a bug, not bad input.
class InternalError : public Error {
  public:
    using Error::Error;
};

/// Invalid scenario configuration. `field()` names the offending key.
class ConfigError : public Error {
  public:
    ConfigError(std::string field, const std::string &message)
        : Error(field + ": " + message), field_(std::move(field)) {
    }

    const std::string &field() const noexcept {
        return field_;
    }

  private:
    std::string field_;
};

}  // namespace embedsim
