// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwrg/ast.hpp"
#include "cwrg/engine.hpp"
#include "cwrg/state.hpp"

namespace cwrg {

struct OracleBudget {
  std::size_t max_states = 200000;
  std::size_t max_steps = 2000000;
};

using StateSet = std::unordered_set<State, StateHash>;

struct OracleReport {
  // reachable[t][p]: stores observed while thread t is at point p.
  std::vector<std::vector<StateSet>> reachable;
  // Stores with every thread at its exit.
  StateSet exit_states;
  // Store transitions performed by each thread's assignments.
  std::vector<std::set<std::pair<State, State>>> steps;
  Universe universe;
  // The state/step budget ran out before the closure was complete.
  bool bounded = false;
  // Every store reached stays within the initial universe.
  bool universe_closed = true;
  std::size_t configurations = 0;
  std::size_t transitions = 0;
};

/// Value universe for exploration: program literals plus {0, 1}, per variable.
Universe oracle_universe(const Program& p);

/// Breadth-first closure over all interleavings of atomic steps, starting from
/// every universe state satisfying the precondition. Assignments and guard
/// evaluations are one step each; skip statements and block ends are silent
/// steps. Throws EvalError on arithmetic overflow and ConfigError on a zero
/// budget.
OracleReport explore(const Program& p, const OracleBudget& budget = {});
OracleReport explore(const Program& p, const Universe& u, const OracleBudget& budget = {});

struct Violation {
  std::string thread;
  std::string point;
  State state;
};

/// Every concrete store reached at (t, p) must lie in the outline assertion
/// at (t, p).
template <StateDomain D>
std::vector<Violation> check_soundness(const Program& p, const D& dom, const AnalysisResult<D>& res,
                                       const OracleReport& report) {
  std::vector<Violation> out;
  for (std::size_t t = 0; t < p.threads.size(); ++t) {
    const Thread& th = p.threads[t];
    if (t >= res.outlines.size() || res.outlines[t].size() != th.points.size()) {
      throw std::invalid_argument("outline of thread " + th.name + " is missing program points");
    }
    for (PointId pt = 0; pt < th.points.size(); ++pt) {
      for (const State& s : report.reachable[t][pt]) {
        if (!dom.contains(res.outlines[t][pt], s)) out.push_back({th.name, th.points[pt].name(), s});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.thread, a.point, a.state) < std::tie(b.thread, b.point, b.state);
  });
  return out;
}

/// Environment steps observed by the oracle that thread t's rely does not
/// admit, as (t, other thread, pre, post).
template <StateDomain D>
std::vector<std::pair<std::size_t, std::pair<State, State>>> uncovered_environment_steps(
    const CondWrites<D>& cw, const AnalysisResult<D>& res, const OracleReport& report, std::size_t t) {
  std::vector<std::pair<std::size_t, std::pair<State, State>>> out;
  for (std::size_t u = 0; u < report.steps.size(); ++u) {
    if (u == t) continue;
    for (const auto& step : report.steps[u]) {
      if (!cw.admits(res.rely[t], step.first, step.second)) out.push_back({u, step});
    }
  }
  return out;
}

}  // namespace cwrg
