// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cwrg/errors.hpp"
#include "cwrg/parser.hpp"
#include "cwrg/runner.hpp"

namespace cwrg {

std::string cell_key(const Cell& c) { return to_string(c.first) + "/" + to_string(c.second); }

namespace {

Cell parse_cell(const std::string& key) {
  const auto slash = key.find('/');
  if (slash == std::string::npos) throw ConfigError("bad cell key '" + key + "'");
  return {parse_domain(key.substr(0, slash)), parse_mode(key.substr(slash + 1))};
}

Verdict parse_verdict(const std::string& s) {
  if (s == "verified") return Verdict::Verified;
  if (s == "notVerified") return Verdict::NotVerified;
  throw ConfigError("bad verdict '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

}  // namespace

std::vector<BenchCase> load_manifest(const std::string& manifest_path) {
  const std::filesystem::path dir = std::filesystem::path(manifest_path).parent_path();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(manifest_path + ": " + e.what());
  }
  std::vector<BenchCase> out;
  for (const auto& c : j.at("cases")) {
    BenchCase bc;
    bc.name = c.at("name").get<std::string>();
    bc.path = (dir / c.at("file").get<std::string>()).string();
    bc.provenance = c.value("provenance", "");
    bc.description = c.value("description", "");
    if (c.contains("expected")) {
      for (const auto& [k, v] : c.at("expected").items()) bc.expected[parse_cell(k)] = parse_verdict(v);
    }
    out.push_back(std::move(bc));
  }
  return out;
}

std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases, const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  for (const auto& bc : cases) {
    std::optional<Program> prog;
    std::string load_error;
    try {
      prog = parse_program(read_file(bc.path));
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (DomainKind dk : opts.domains) {
      for (Mode m : opts.modes) {
        BenchRow row;
        row.name = bc.name;
        row.domain = dk;
        row.mode = m;
        if (auto it = bc.expected.find({dk, m}); it != bc.expected.end()) row.expected = it->second;
        if (!prog) {
          row.error = load_error;
          rows.push_back(std::move(row));
          continue;
        }
        AnalysisConfig cfg;
        cfg.domain = dk;
        cfg.mode = m;
        try {
          std::vector<double> times;
          for (std::size_t k = 0; k < std::max<std::size_t>(1, opts.repetitions); ++k) {
            RunOptions ro;
            ro.check_oracle = opts.check_oracle && k == 0;
            const RunReport r = run_analysis(*prog, cfg, ro);
            times.push_back(r.metrics.time_s);
            row.verdict = r.verdict;
            row.ops = r.metrics.ops;
            row.converged = r.converged;
            if (r.oracle) row.oracle_violations = r.oracle->violations.size();
          }
          row.time_s = median(std::move(times));
        } catch (const std::exception& e) {
          row.verdict.reset();
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string render_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "name,domain,mode,verdict,ops,time_s,converged,expected,oracle_violations,error\n";
  for (const auto& r : rows) {
    os << r.name << ',' << to_string(r.domain) << ',' << to_string(r.mode) << ','
       << (r.verdict ? to_string(*r.verdict) : "error") << ',' << r.ops << ',' << std::setprecision(6)
       << r.time_s << ',' << (r.converged ? "true" : "false") << ','
       << (r.expected ? to_string(*r.expected) : "") << ','
       << (r.oracle_violations ? std::to_string(*r.oracle_violations) : "") << ',';
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << err << '\n';
  }
  return os.str();
}

std::string render_table(const std::vector<BenchRow>& rows) {
  std::vector<std::string> names;
  std::vector<Cell> cells;
  std::map<std::pair<std::string, Cell>, const BenchRow*> index;
  for (const auto& r : rows) {
    if (std::find(names.begin(), names.end(), r.name) == names.end()) names.push_back(r.name);
    const Cell c{r.domain, r.mode};
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
    index[{r.name, c}] = &r;
  }
  std::size_t name_w = 7;
  for (const auto& n : names) name_w = std::max(name_w, n.size());

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "program";
  for (const auto& c : cells) os << " | " << std::setw(30) << cell_key(c);
  os << '\n' << std::setw(static_cast<int>(name_w)) << "";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    os << " | " << std::setw(5) << "ver" << std::setw(10) << "ops" << std::setw(15) << "time_s";
  }
  os << '\n';
  for (const auto& n : names) {
    os << std::setw(static_cast<int>(name_w)) << n;
    for (const auto& c : cells) {
      os << " | ";
      auto it = index.find({n, c});
      if (it == index.end()) {
        os << std::setw(30) << "";
        continue;
      }
      const BenchRow& r = *it->second;
      std::string mark = !r.verdict ? "err" : (*r.verdict == Verdict::Verified ? "yes" : "no");
      if (!r.matches_expected()) mark += "!";
      std::ostringstream t;
      t << std::fixed << std::setprecision(6) << r.time_s;
      os << std::setw(5) << mark << std::setw(10) << r.ops << std::setw(15) << t.str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cwrg
