// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cwrg/bench.hpp"
#include "cwrg/errors.hpp"
#include "cwrg/parser.hpp"
#include "cwrg/runner.hpp"

namespace cwrg::cli {
namespace {

struct AnalyzeArgs {
  std::string file;
  std::string domain = "const";
  std::string mode = "nontransitive";
  std::optional<std::size_t> n;
  std::vector<std::string> rely_vars;
  std::string emit = "text";
  bool check_oracle = false;
  bool ascii = false;
  std::size_t max_disjuncts = 64;
  std::size_t fuel_inner = 1000;
  std::size_t fuel_outer = 1000;
  bool no_prune = false;
  bool no_close_constrained = false;
  bool no_close_skip = false;
};

struct BenchArgs {
  std::string manifest;
  std::size_t reps = 3;
  std::string csv;
  bool check_oracle = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// THREAD=v1,v2 (an empty list is allowed: THREAD=)
std::pair<std::string, std::vector<std::string>> parse_rely_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--rely-vars expects THREAD=v1,v2, got '" + spec + "'");
  std::vector<std::string> vars;
  std::stringstream ss(spec.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vars.push_back(item);
  }
  return {spec.substr(0, eq), vars};
}

int analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::string text;
  Program prog;
  try {
    text = read_file(a.file);
    prog = parse_program(text);
  } catch (const ParseError& e) {
    err << a.file << ':' << e.what() << '\n';
    return kError;
  }

  AnalysisConfig cfg;
  cfg.domain = parse_domain(a.domain);
  cfg.mode = parse_mode(a.mode);
  cfg.n = a.n;
  for (const auto& spec : a.rely_vars) {
    auto [thread, vars] = parse_rely_spec(spec);
    cfg.rely_vars[thread] = std::move(vars);
  }
  cfg.max_disjuncts = a.max_disjuncts;
  cfg.fuel_inner = a.fuel_inner;
  cfg.fuel_outer = a.fuel_outer;
  cfg.prune_stabilise = !a.no_prune;
  cfg.close_constrained_only = !a.no_close_constrained;
  cfg.close_skip_covered = !a.no_close_skip;

  RunOptions ro;
  ro.check_oracle = a.check_oracle;
  ro.glyphs = a.ascii ? Glyphs::ascii() : Glyphs::unicode();
  const RunReport report = run_analysis(prog, cfg, ro);
  if (a.emit == "machine") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(prog, report);
  }
  return exit_status(report);
}

int bench(const BenchArgs& b, std::ostream& out) {
  BenchOptions opts;
  opts.repetitions = b.reps;
  opts.check_oracle = b.check_oracle;
  const auto rows = run_suite(load_manifest(b.manifest), opts);
  out << render_table(rows);
  if (!b.csv.empty()) {
    std::ofstream f(b.csv);
    if (!f) throw ConfigError("cannot write '" + b.csv + "'");
    f << render_csv(rows);
  }
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.error.empty() && r.matches_expected() && (!r.oracle_violations || *r.oracle_violations == 0);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thread-modular rely-guarantee analyser over conditional-writes interference", "cwrg"};
  app.set_version_flag("--version", CWRG_VERSION);
  app.require_subcommand(1);

  AnalyzeArgs a;
  auto* an = app.add_subcommand("analyze", "Analyse a program and print its proof outline");
  an->add_option("file", a.file, "Program file")->required();
  an->add_option("--domain", a.domain, "State domain")->check(CLI::IsMember({"const", "const-powerset"}));
  an->add_option("--mode", a.mode, "Interference mode")->check(CLI::IsMember({"transitive", "nontransitive"}));
  an->add_option("--n", a.n, "Stabilisation precision (default: number of variables)");
  an->add_option("--rely-vars", a.rely_vars, "Rely variables for a thread, as THREAD=v1,v2 (repeatable)");
  an->add_option("--emit", a.emit, "Output format")->check(CLI::IsMember({"text", "machine"}));
  an->add_flag("--check-oracle", a.check_oracle, "Check the outline against explicit-state exploration");
  an->add_flag("--ascii", a.ascii, "ASCII glyphs for top, bottom and maps-to");
  an->add_option("--max-disjuncts", a.max_disjuncts, "Powerset disjunct cap")->check(CLI::PositiveNumber);
  an->add_option("--fuel-inner", a.fuel_inner, "Iteration cap for loops, stabilise_fix and close")
      ->check(CLI::PositiveNumber);
  an->add_option("--fuel-outer", a.fuel_outer, "Iteration cap for the guarantee fixpoint")
      ->check(CLI::PositiveNumber);
  an->add_flag("--no-opt-b1,--no-prune", a.no_prune, "Disable stabilise pruning");
  an->add_flag("--no-opt-b2a,--no-close-constrained", a.no_close_constrained, "close: consider all variable sets");
  an->add_flag("--no-opt-b2b,--no-close-skip", a.no_close_skip, "close: do not skip covered supersets");

  BenchArgs b;
  auto* bn = app.add_subcommand("bench", "Run the corpus under every domain and mode");
  bn->add_option("--manifest", b.manifest, "Corpus manifest")->required();
  bn->add_option("--reps", b.reps, "Repetitions per cell (median time)")->check(CLI::PositiveNumber);
  bn->add_option("--csv", b.csv, "Also write rows as CSV");
  bn->add_flag("--check-oracle", b.check_oracle, "Check every outline against the oracle");

  if (!args.empty() && args.front() != "analyze" && args.front() != "bench" && args.front().rfind('-', 0) != 0) {
    args.insert(args.begin(), "analyze");
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kError;
  }

  try {
    if (an->parsed()) return analyze(a, out, err);
    return bench(b, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace cwrg::cli
