// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cwrg {

enum class Mode { Transitive, NonTransitive };
enum class DomainKind { Const, ConstPowerset };
enum class Verdict { Verified, NotVerified };

std::string to_string(Mode m);
std::string to_string(DomainKind d);
std::string to_string(Verdict v);
Mode parse_mode(const std::string& s);
DomainKind parse_domain(const std::string& s);

struct AnalysisConfig {
  Mode mode = Mode::NonTransitive;
  DomainKind domain = DomainKind::Const;
  // Stabilisation precision; defaults to the number of program variables.
  std::optional<std::size_t> n;
  // Per-thread rely variable overrides (thread name -> variable names). Threads
  // not listed use the program's relyvars declaration or all variables.
  std::map<std::string, std::vector<std::string>> rely_vars;
  std::size_t max_disjuncts = 64;
  std::size_t fuel_inner = 1000;
  std::size_t fuel_outer = 1000;
  bool prune_stabilise = true;         // stabilise pruning
  bool close_constrained_only = true;  // close: constrained variables only
  bool close_skip_covered = true;      // close: skip supersets of covered sets
  // Keep every round's guarantees in the result.
  bool record_trace = false;
};

struct Metrics {
  std::uint64_t ops = 0;  // state-lattice joins plus meets
  double time_s = 0.0;
  std::size_t outer_iterations = 0;
};

}  // namespace cwrg
