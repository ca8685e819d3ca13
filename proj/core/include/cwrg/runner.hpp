// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cwrg/config.hpp"
#include "cwrg/oracle.hpp"
#include "cwrg/state_domain.hpp"

namespace cwrg {

struct RunOptions {
  bool check_oracle = false;
  OracleBudget budget;
  Glyphs glyphs = Glyphs::unicode();
};

using NamedStrings = std::vector<std::pair<std::string, std::string>>;

struct ThreadReport {
  std::string name;
  NamedStrings rely;       // variable -> write-condition
  NamedStrings guarantee;  // variable -> write-condition
  NamedStrings outline;    // point name -> assertion, in source order
  std::string rely_text;
  std::string guarantee_text;
};

struct OracleSummary {
  bool bounded = false;
  bool universe_closed = true;
  std::size_t configurations = 0;
  std::size_t transitions = 0;
  std::size_t exit_states = 0;
  std::vector<std::pair<std::string, std::string>> violations;  // "T@point" -> state
};

/// Domain-independent view of one analysis run, ready for rendering.
struct RunReport {
  Mode mode = Mode::NonTransitive;
  DomainKind domain = DomainKind::Const;
  std::size_t n = 0;
  Verdict verdict = Verdict::NotVerified;
  bool converged = false;
  Metrics metrics;
  std::vector<ThreadReport> threads;
  std::optional<OracleSummary> oracle;
};

/// Analyses `p` with the configured domain; with check_oracle also explores
/// the program and checks every outline assertion against it.
RunReport run_analysis(const Program& p, const AnalysisConfig& cfg, const RunOptions& opts = {});

nlohmann::ordered_json to_json(const RunReport& r);

/// Annotated source listing per thread, rely/guarantee maps, verdict and metrics.
std::string to_text(const Program& p, const RunReport& r);

/// 0 verified, 1 not verified, 3 oracle violations. Errors (2) are reported
/// by the caller.
int exit_status(const RunReport& r);

}  // namespace cwrg
