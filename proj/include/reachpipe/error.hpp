// Copyright 2026 The reachpipe Authors
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

namespace reachpipe {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computation produced NaN/Inf or an otherwise unusable number.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `offset` is a byte offset into the parsed string,
/// `line` a 1-based line number; either may be zero when unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset, std::size_t line = 0)
      : Error(message), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// Product of two non-constant terms (or division by one).
class NonlinearTermError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// Structural problems in a component network or its flattening.
class ModelError : public Error {
 public:
  enum class Kind {
    kDuplicateId,
    kUndeclaredParam,
    kUnknownComponent,
    kUnboundParameter,
    kDuplicateDriver,
    kBindCycle,
    kAlgebraicLoop,
    kUnknownName,
    kUnsupported,
  };

  ModelError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Problems in a CFG file or in the initial-set constraint string.
class ConfigError : public Error {
 public:
  enum class Kind {
    kMissingKey,
    kBadNumber,
    kBadValue,
    kEmptySet,
    kUnknownRelop,
    kUnboundedVariable,
  };

  ConfigError(Kind kind, const std::string& message, std::size_t line = 0)
      : Error(message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace reachpipe
