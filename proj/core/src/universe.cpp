// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <sstream>

#include "cwrg/errors.hpp"
#include "cwrg/state.hpp"

namespace cwrg {

Universe::Universe(std::vector<std::vector<Value>> per_var, std::size_t cap)
    : per_var_(std::move(per_var)), cap_(cap) {
  for (auto& vals : per_var_) {
    if (vals.empty()) throw ConfigError("universe: every variable needs at least one value");
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
}

Universe Universe::uniform(std::size_t num_vars, std::vector<Value> values, std::size_t cap) {
  return Universe(std::vector<std::vector<Value>>(num_vars, std::move(values)), cap);
}

bool Universe::contains(const State& s) const {
  if (s.size() != per_var_.size()) return false;
  for (std::size_t v = 0; v < per_var_.size(); ++v) {
    if (!std::binary_search(per_var_[v].begin(), per_var_[v].end(), s.values[v])) return false;
  }
  return true;
}

std::size_t Universe::product_size() const {
  std::size_t n = 1;
  for (const auto& vals : per_var_) {
    if (n > cap_ / vals.size()) {
      throw ConfigError("universe exceeds the enumeration cap of " + std::to_string(cap_) + " states");
    }
    n *= vals.size();
  }
  return n;
}

void Universe::for_each_state(const std::function<void(const State&)>& fn) const {
  product_size();
  const std::size_t n = per_var_.size();
  std::vector<std::size_t> idx(n, 0);
  State s;
  s.values.resize(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) s.values[v] = per_var_[v][idx[v]];
    fn(s);
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++idx[v] < per_var_[v].size()) break;
      idx[v] = 0;
      if (v == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<State> Universe::states() const {
  std::vector<State> out;
  for_each_state([&](const State& s) { out.push_back(s); });
  return out;
}

std::string to_string(const State& s, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << '{';
  for (std::size_t v = 0; v < s.size(); ++v) os << (v ? ", " : "") << names[v] << '=' << s.values[v];
  os << '}';
  return os.str();
}

}  // namespace cwrg
