// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwrg/config.hpp"

namespace cwrg {

using Cell = std::pair<DomainKind, Mode>;

struct BenchCase {
  std::string name;
  std::string path;  // absolute, or relative to the manifest directory
  std::string provenance;
  std::string description;
  std::map<Cell, Verdict> expected;
};

/// Reads a corpus manifest:
///   {"cases": [{"name", "file", "provenance", "description",
///               "expected": {"const/nontransitive": "verified", ...}}]}
std::vector<BenchCase> load_manifest(const std::string& manifest_path);

struct BenchOptions {
  std::size_t repetitions = 3;
  bool check_oracle = false;
  std::vector<DomainKind> domains{DomainKind::Const, DomainKind::ConstPowerset};
  std::vector<Mode> modes{Mode::NonTransitive, Mode::Transitive};
};

struct BenchRow {
  std::string name;
  DomainKind domain = DomainKind::Const;
  Mode mode = Mode::NonTransitive;
  std::optional<Verdict> verdict;  // empty on error
  std::uint64_t ops = 0;
  double time_s = 0.0;  // median over repetitions
  bool converged = false;
  std::optional<Verdict> expected;
  std::optional<std::size_t> oracle_violations;
  std::string error;

  bool matches_expected() const { return !expected || verdict == expected; }
};

/// Runs every case under every configured cell. A failing cell is recorded in
/// its row and does not stop the suite.
std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases, const BenchOptions& opts = {});

std::string cell_key(const Cell& c);
std::string render_csv(const std::vector<BenchRow>& rows);
/// One line per program, one column group (verdict, ops, time) per cell.
std::string render_table(const std::vector<BenchRow>& rows);

}  // namespace cwrg
