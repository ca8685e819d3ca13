// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cwrg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Concrete evaluation failure (arithmetic overflow).
class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An inner or outer fixpoint ran out of fuel.
class FuelExhausted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cwrg
