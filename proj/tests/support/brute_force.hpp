// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <deque>
#include <set>
#include <vector>

#include "cwrg/condwrites.hpp"

// Set-level reference semantics over an explicit universe. Only admits() and
// contains() of the code under test are used, both of which are checked
// directly against their definitions elsewhere.
namespace cwrg::testing {

using StateSetOrd = std::set<State>;

template <StateDomain D>
StateSetOrd concretise(const D& dom, const typename D::Elem& d, const Universe& u) {
  const auto v = gamma(dom, d, u);
  return {v.begin(), v.end()};
}

/// {s2 in u | exists s1 in from: (s1, s2) admitted by i}
template <StateDomain D>
StateSetOrd one_step_post(const CondWrites<D>& cw, const Interference<typename D::Elem>& i,
                          const StateSetOrd& from, const Universe& u) {
  StateSetOrd out;
  const auto all = u.states();
  for (const auto& s1 : from) {
    for (const auto& s2 : all) {
      if (cw.admits(i, s1, s2)) out.insert(s2);
    }
  }
  return out;
}

/// Reflexive-transitive closure of the admitted steps from `from`, within u.
template <StateDomain D>
StateSetOrd reachable(const CondWrites<D>& cw, const Interference<typename D::Elem>& i, const StateSetOrd& from,
                      const Universe& u) {
  StateSetOrd seen = from;
  std::deque<State> work(from.begin(), from.end());
  const auto all = u.states();
  while (!work.empty()) {
    const State s1 = work.front();
    work.pop_front();
    for (const auto& s2 : all) {
      if (cw.admits(i, s1, s2) && seen.insert(s2).second) work.push_back(s2);
    }
  }
  return seen;
}

template <StateDomain D>
bool covers(const D& dom, const typename D::Elem& d, const StateSetOrd& states) {
  for (const auto& s : states) {
    if (!dom.contains(d, s)) return false;
  }
  return true;
}

/// gamma-x of i restricted to u is closed under relational composition.
template <StateDomain D>
bool transitive_on(const CondWrites<D>& cw, const Interference<typename D::Elem>& i, const Universe& u) {
  const auto all = u.states();
  for (const auto& s1 : all) {
    for (const auto& s2 : all) {
      if (!cw.admits(i, s1, s2)) continue;
      for (const auto& s3 : all) {
        if (cw.admits(i, s2, s3) && !cw.admits(i, s1, s3)) return false;
      }
    }
  }
  return true;
}

}  // namespace cwrg::testing
