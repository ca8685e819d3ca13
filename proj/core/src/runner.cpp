// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/runner.hpp"

#include <iomanip>
#include <sstream>

#include "cwrg/engine.hpp"
#include "cwrg/errors.hpp"
#include "cwrg/printer.hpp"

namespace cwrg {

std::string to_string(Mode m) { return m == Mode::Transitive ? "transitive" : "nontransitive"; }

std::string to_string(DomainKind d) { return d == DomainKind::Const ? "const" : "const-powerset"; }

std::string to_string(Verdict v) { return v == Verdict::Verified ? "verified" : "notVerified"; }

Mode parse_mode(const std::string& s) {
  if (s == "transitive") return Mode::Transitive;
  if (s == "nontransitive") return Mode::NonTransitive;
  throw ConfigError("unknown mode '" + s + "'");
}

DomainKind parse_domain(const std::string& s) {
  if (s == "const") return DomainKind::Const;
  if (s == "const-powerset") return DomainKind::ConstPowerset;
  throw ConfigError("unknown domain '" + s + "'");
}

namespace {

template <StateDomain D>
RunReport run_with(const Program& p, const AnalysisConfig& cfg, const RunOptions& opts) {
  Analyzer<D> analyzer(p, cfg);
  const AnalysisResult<D> res = analyzer.analyse();
  const D& dom = analyzer.domain();
  const auto& cw = analyzer.condwrites();

  RunReport out;
  out.mode = cfg.mode;
  out.domain = cfg.domain;
  out.n = analyzer.n();
  out.verdict = res.verdict;
  out.converged = res.converged;
  out.metrics = res.metrics;
  for (std::size_t t = 0; t < p.threads.size(); ++t) {
    const Thread& th = p.threads[t];
    ThreadReport tr;
    tr.name = th.name;
    for (VarId v = 0; v < p.num_vars(); ++v) {
      tr.rely.emplace_back(p.vars[v], dom.to_string(res.rely[t][v], p.vars, opts.glyphs));
      tr.guarantee.emplace_back(p.vars[v], dom.to_string(res.guarantee[t][v], p.vars, opts.glyphs));
    }
    for (PointId pt = 0; pt < th.points.size(); ++pt) {
      tr.outline.emplace_back(th.points[pt].name(), dom.to_string(res.outlines[t][pt], p.vars, opts.glyphs));
    }
    tr.rely_text = cw.to_string(res.rely[t], p.vars, opts.glyphs);
    tr.guarantee_text = cw.to_string(res.guarantee[t], p.vars, opts.glyphs);
    out.threads.push_back(std::move(tr));
  }

  if (opts.check_oracle) {
    const OracleReport rep = explore(p, opts.budget);
    OracleSummary sum;
    sum.bounded = rep.bounded;
    sum.universe_closed = rep.universe_closed;
    sum.configurations = rep.configurations;
    sum.transitions = rep.transitions;
    sum.exit_states = rep.exit_states.size();
    for (const auto& v : check_soundness(p, dom, res, rep)) {
      sum.violations.emplace_back(v.thread + "@" + v.point, to_string(v.state, p.vars));
    }
    out.oracle = std::move(sum);
  }
  return out;
}

void annotate_block(std::ostream& os, const Block& b, const Program& p, const ThreadReport& tr, int depth);

void assertion_line(std::ostream& os, const ThreadReport& tr, PointId pt, int depth) {
  os << std::string(4 + 4 * static_cast<std::size_t>(depth), ' ') << tr.outline[pt].second << '\n';
}

void statement_line(std::ostream& os, const Stmt& s, const std::string& text, int depth) {
  std::ostringstream label;
  label << s.label << ':';
  os << std::left << std::setw(4) << label.str() << std::string(4 * static_cast<std::size_t>(depth), ' ')
     << text << '\n';
}

void annotate_block(std::ostream& os, const Block& b, const Program& p, const ThreadReport& tr, int depth) {
  for (const auto& sp : b) {
    const Stmt& s = *sp;
    assertion_line(os, tr, s.before, depth);
    switch (s.kind) {
      case Stmt::Kind::Skip:
        statement_line(os, s, "skip", depth);
        break;
      case Stmt::Kind::Assign:
        statement_line(os, s, print_assign(s.assign, p.vars), depth);
        break;
      case Stmt::Kind::If:
        statement_line(os, s, "if " + print_cond(*s.cond, p.vars) + ":", depth);
        annotate_block(os, s.then_block, p, tr, depth + 1);
        assertion_line(os, tr, s.then_end, depth + 1);
        if (s.has_else) {
          os << std::string(4 + 4 * static_cast<std::size_t>(depth), ' ') << "else:\n";
          annotate_block(os, s.else_block, p, tr, depth + 1);
          assertion_line(os, tr, s.else_end, depth + 1);
        }
        break;
      case Stmt::Kind::While:
        statement_line(os, s, "while " + print_cond(*s.cond, p.vars) + ":", depth);
        annotate_block(os, s.then_block, p, tr, depth + 1);
        assertion_line(os, tr, s.then_end, depth + 1);
        break;
    }
  }
}

}  // namespace

RunReport run_analysis(const Program& p, const AnalysisConfig& cfg, const RunOptions& opts) {
  switch (cfg.domain) {
    case DomainKind::Const:
      return run_with<ConstDomain>(p, cfg, opts);
    case DomainKind::ConstPowerset:
      return run_with<PowersetDomain>(p, cfg, opts);
  }
  throw ConfigError("unknown domain");
}

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  j["domain"] = to_string(r.domain);
  j["n"] = r.n;
  j["verdict"] = to_string(r.verdict);
  j["converged"] = r.converged;
  j["ops"] = r.metrics.ops;
  j["time_s"] = r.metrics.time_s;
  j["outer_iterations"] = r.metrics.outer_iterations;
  auto named = [](const NamedStrings& xs) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : xs) o[k] = v;
    return o;
  };
  j["rely"] = nlohmann::ordered_json::object();
  j["guarantee"] = nlohmann::ordered_json::object();
  j["outline"] = nlohmann::ordered_json::object();
  for (const auto& t : r.threads) {
    j["rely"][t.name] = named(t.rely);
    j["guarantee"][t.name] = named(t.guarantee);
    j["outline"][t.name] = named(t.outline);
  }
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    nlohmann::ordered_json oj;
    oj["bounded"] = o.bounded;
    oj["universe_closed"] = o.universe_closed;
    oj["configurations"] = o.configurations;
    oj["transitions"] = o.transitions;
    oj["exit_states"] = o.exit_states;
    oj["violations"] = nlohmann::ordered_json::array();
    for (const auto& [where, state] : o.violations) oj["violations"].push_back({{"at", where}, {"state", state}});
    j["oracle"] = std::move(oj);
  }
  return j;
}

std::string to_text(const Program& p, const RunReport& r) {
  std::ostringstream os;
  os << "domain " << to_string(r.domain) << ", mode " << to_string(r.mode) << ", N = " << r.n << "\n\n";
  for (std::size_t t = 0; t < r.threads.size(); ++t) {
    const ThreadReport& tr = r.threads[t];
    const Thread& th = p.threads[t];
    os << th.name << ":\n";
    annotate_block(os, th.body, p, tr, 0);
    os << "exit: " << tr.outline[th.exit_point].second << "\n\n";
  }
  for (const auto& tr : r.threads) {
    os << "R(" << tr.name << ") = " << tr.rely_text << '\n';
    os << "G(" << tr.name << ") = " << tr.guarantee_text << '\n';
  }
  os << '\n';
  os << "verdict: " << to_string(r.verdict) << (r.converged ? "" : " (outer fixpoint did not converge)") << '\n';
  os << "ops: " << r.metrics.ops << '\n';
  os << "outer iterations: " << r.metrics.outer_iterations << '\n';
  os << "time: " << r.metrics.time_s << " s\n";
  if (r.oracle) {
    const OracleSummary& o = *r.oracle;
    os << "\noracle: " << o.configurations << " configurations, " << o.transitions << " transitions, "
       << o.exit_states << " exit states" << (o.bounded ? " (budget exhausted; advisory only)" : "") << '\n';
    os << "oracle violations: " << o.violations.size() << '\n';
    for (const auto& [where, state] : o.violations) os << "  " << where << ": " << state << '\n';
  }
  return os.str();
}

int exit_status(const RunReport& r) {
  if (r.oracle && !r.oracle->violations.empty()) return 3;
  return r.verdict == Verdict::Verified ? 0 : 1;
}

}  // namespace cwrg
