// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cwrg/const_map.hpp"
#include "cwrg/parser.hpp"
#include "cwrg/state.hpp"

// Parsing shortcuts and a reference abstraction for unit tests. Programs use
// the variables r, x, z (ids 0, 1, 2).
namespace cwrg::testing {

inline const std::vector<std::string> kRXZ = {"r", "x", "z"};

inline CondPtr cond_rxz(const std::string& text) {
  return parse_program("vars r, x, z; thread T { if (" + text + ") { skip; } }").threads[0].body[0]->cond;
}

inline Assign assign_rxz(const std::string& text) {
  return parse_program("vars r, x, z; thread T { " + text + "; }").threads[0].body[0]->assign;
}

/// Map over r, x, z from (name, value) bindings.
inline ConstMap rxz(std::initializer_list<std::pair<const char*, Value>> bindings) {
  ConstMap m = ConstMap::top(3);
  for (const auto& [name, v] : bindings) {
    for (VarId id = 0; id < 3; ++id) {
      if (kRXZ[id] == name) m.bind(id, v);
    }
  }
  return m;
}

inline State state(std::initializer_list<Value> vs) { return State{std::vector<Value>(vs)}; }

/// Best constant-map description of a state set.
inline ConstMap best_const(const std::set<State>& states, std::size_t nv) {
  if (states.empty()) return ConstMap::bottom();
  ConstMap m = ConstMap::top(nv);
  for (VarId v = 0; v < nv; ++v) {
    const Value k = states.begin()->values[v];
    bool same = true;
    for (const auto& s : states) same = same && s[v] == k;
    if (same) m.bind(v, k);
  }
  return m;
}

}  // namespace cwrg::testing
