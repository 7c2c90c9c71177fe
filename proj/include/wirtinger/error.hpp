//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wirtinger {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands whose shapes do not conform to an operation's arity rule.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside a primitive's domain (log(0), division by zero, ...).
// When raised during graph evaluation the offending node is attached.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
  DomainError(const std::string& what, std::size_t node, std::string primitive)
      : Error(what + " (at node #" + std::to_string(node) + ", " + primitive + ")"),
        node_(node),
        primitive_(std::move(primitive)) {}

  std::optional<std::size_t> node() const { return node_; }
  const std::string& primitive() const { return primitive_; }

 private:
  std::optional<std::size_t> node_;
  std::string primitive_;
};

// A computation produced NaN or infinity.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration or argument value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wirtinger
