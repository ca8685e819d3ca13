// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cwrg/ast.hpp"

namespace cwrg {

/// A concrete store: one value per program variable, indexed by VarId.
struct State {
  std::vector<Value> values;

  Value operator[](VarId v) const { return values[v]; }
  Value& operator[](VarId v) { return values[v]; }
  std::size_t size() const { return values.size(); }

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Value v : s.values) {
      h ^= std::hash<Value>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Finite per-variable value sets, used to make concretisation enumerable.
class Universe {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  Universe() = default;
  explicit Universe(std::vector<std::vector<Value>> per_var, std::size_t cap = kDefaultCap);
  /// The same value set for each of `num_vars` variables.
  static Universe uniform(std::size_t num_vars, std::vector<Value> values,
                          std::size_t cap = kDefaultCap);

  std::size_t num_vars() const { return per_var_.size(); }
  const std::vector<Value>& values(VarId v) const { return per_var_[v]; }
  bool contains(const State& s) const;

  /// Number of states in the product; throws ConfigError above the cap.
  std::size_t product_size() const;

  /// Calls fn(state) for every state of the product, in lexicographic order.
  void for_each_state(const std::function<void(const State&)>& fn) const;
  std::vector<State> states() const;

 private:
  std::vector<std::vector<Value>> per_var_;
  std::size_t cap_ = kDefaultCap;
};

std::string to_string(const State& s, const std::vector<std::string>& names);

}  // namespace cwrg
