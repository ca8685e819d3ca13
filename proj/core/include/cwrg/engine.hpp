// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <type_traits>
#include <string>
#include <vector>

#include "cwrg/ast.hpp"
#include "cwrg/condwrites.hpp"
#include "cwrg/config.hpp"
#include "cwrg/const_map.hpp"
#include "cwrg/const_powerset.hpp"
#include "cwrg/errors.hpp"
#include "cwrg/semantics.hpp"

namespace cwrg {

/// Assertion per program point of one thread, indexed by PointId.
template <typename Elem>
using ProofOutline = std::vector<Elem>;

template <StateDomain D>
struct AnalysisResult {
  using Elem = typename D::Elem;
  using Interf = Interference<Elem>;

  std::vector<Interf> rely;       // per thread
  std::vector<Interf> guarantee;  // per thread
  std::vector<ProofOutline<Elem>> outlines;
  Metrics metrics;
  Verdict verdict = Verdict::NotVerified;
  bool converged = false;
  // Guarantees after each outer round (only with record_trace).
  std::vector<std::vector<Interf>> guarantee_trace;
};

/// Thread-modular rely-guarantee generation over the conditional-writes
/// domain, parameterised by a state domain.
///
/// Owns the domain and the operation counter; one Analyzer per run.
template <StateDomain D>
class Analyzer {
 public:
  using Elem = typename D::Elem;
  using Interf = Interference<Elem>;
  using Result = AnalysisResult<D>;

  struct Triple {
    Elem d;
    Interf r;
    Interf g;
  };

  Analyzer(const Program& p, const AnalysisConfig& cfg)
      : prog_(p), cfg_(cfg), dom_(make_domain(p, cfg, &counter_)), cw_(dom_, cw_options(cfg)) {
    n_ = cfg.n.value_or(p.num_vars());
    if (n_ > p.num_vars()) {
      throw ConfigError("N = " + std::to_string(n_) + " exceeds the number of variables (" +
                        std::to_string(p.num_vars()) + ")");
    }
    rely_vars_.reserve(p.threads.size());
    for (const auto& t : p.threads) rely_vars_.push_back(t.rely_vars);
    for (const auto& [thread, names] : cfg.rely_vars) {
      std::size_t idx;
      try {
        idx = p.thread_index(thread);
      } catch (const std::out_of_range&) {
        throw ConfigError("--rely-vars names unknown thread '" + thread + "'");
      }
      VarSet vs;
      for (const auto& name : names) {
        try {
          vs.insert(p.var_id(name));
        } catch (const std::out_of_range&) {
          throw ConfigError("--rely-vars names unknown variable '" + name + "'");
        }
      }
      rely_vars_[idx] = vs;
    }
  }

  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  const D& domain() const { return dom_; }
  const CondWrites<D>& condwrites() const { return cw_; }
  const Program& program() const { return prog_; }
  std::size_t n() const { return n_; }
  VarSet rely_vars(std::size_t thread) const { return rely_vars_[thread]; }
  std::uint64_t ops() const { return counter_.total(); }

  /// Drops every variable outside `keep`: their write-conditions become top
  /// and they are havocked in the others.
  Interf reduce(const Interf& i, VarSet keep) const {
    const VarSet drop = prog_.all_vars() - keep;
    Interf out = i;
    for (VarId v = 0; v < i.size(); ++v) {
      out[v] = keep.contains(v) ? dom_.havoc(i[v], drop) : dom_.top();
    }
    return out;
  }

  /// Rely of thread t: the reduced join of every other thread's guarantee,
  /// closed in transitive mode.
  Interf rely(std::size_t t, const std::vector<Interf>& g) const {
    Interf env = cw_.bottom();
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (u != t) env = cw_.join(env, g[u]);
    }
    env = reduce(env, rely_vars_[t]);
    return cfg_.mode == Mode::Transitive ? cw_.close(env) : env;
  }

  Elem stabilise_op(const Interf& r, const Elem& d) const {
    return cfg_.mode == Mode::Transitive ? cw_.stabilise(r, d, n_) : cw_.stabilise_fix(r, d, n_);
  }

  /// Collective semantics of a block; records stabilised assertions into
  /// `outline` (joined with whatever is already there).
  Triple collect(const Block& block, Triple x, ProofOutline<Elem>& outline) const {
    for (const auto& s : block) x = collect(*s, std::move(x), outline);
    return x;
  }

  Triple collect(const Stmt& s, Triple x, ProofOutline<Elem>& outline) const {
    switch (s.kind) {
      case Stmt::Kind::Skip:
        record(outline, s.before, stabilise_op(x.r, x.d));
        return x;
      case Stmt::Kind::Assign: {
        Elem d = stabilise_op(x.r, x.d);
        record(outline, s.before, d);
        x.g = cw_.join(x.g, cw_.transitions(d, s.assign));
        x.d = dom_.post(s.assign, d);
        return x;
      }
      case Stmt::Kind::If: {
        const Elem d = stabilise_op(x.r, x.d);
        record(outline, s.before, d);
        Triple t{dom_.filter(*s.cond, d), x.r, x.g};
        t = collect(s.then_block, std::move(t), outline);
        record(outline, s.then_end, stabilise_op(t.r, t.d));
        Triple e{dom_.filter(*negate(s.cond), d), x.r, x.g};
        e = collect(s.else_block, std::move(e), outline);
        if (s.has_else) record(outline, s.else_end, stabilise_op(e.r, e.d));
        return join(t, e);
      }
      case Stmt::Kind::While: {
        const CondPtr exit_cond = negate(s.cond);
        Triple head = std::move(x);
        for (std::size_t k = 0;; ++k) {
          if (k == cfg_.fuel_inner) {
            throw FuelExhausted("loop at L" + std::to_string(s.label) + " did not converge within " +
                                std::to_string(cfg_.fuel_inner) + " iterations");
          }
          Triple body{dom_.filter(*s.cond, stabilise_op(head.r, head.d)), head.r, head.g};
          body = collect(s.then_block, std::move(body), outline);
          record(outline, s.then_end, stabilise_op(body.r, body.d));
          Triple next = join(head, body);
          if (dom_.leq(next.d, head.d) && cw_.leq(next.g, head.g)) break;
          head = std::move(next);
        }
        const Elem d = stabilise_op(head.r, head.d);
        record(outline, s.before, d);
        head.d = dom_.filter(*exit_cond, d);
        return head;
      }
    }
    return x;
  }

  Result analyse() {
    const auto start = std::chrono::steady_clock::now();
    counter_ = {};
    const std::size_t nt = prog_.threads.size();
    const Elem d_pre = dom_.filter(*prog_.pre, dom_.top());

    Result res;
    std::vector<Interf> g(nt, cw_.bottom());
    std::vector<Interf> r(nt, cw_.bottom());
    std::vector<ProofOutline<Elem>> outlines(nt);
    for (std::size_t round = 1; round <= cfg_.fuel_outer; ++round) {
      res.metrics.outer_iterations = round;
      for (std::size_t t = 0; t < nt; ++t) r[t] = rely(t, g);
      std::vector<Interf> next(nt);
      for (std::size_t t = 0; t < nt; ++t) {
        const Thread& th = prog_.threads[t];
        outlines[t].assign(th.points.size(), dom_.bottom());
        Triple out = collect(th.body, Triple{d_pre, r[t], cw_.bottom()}, outlines[t]);
        outlines[t][th.exit_point] = stabilise_op(r[t], out.d);
        next[t] = std::move(out.g);
      }
      if (cfg_.record_trace) res.guarantee_trace.push_back(next);
      bool stable = true;
      for (std::size_t t = 0; t < nt && stable; ++t) stable = cw_.equal(next[t], g[t]);
      g = std::move(next);
      if (stable) {
        res.converged = true;
        break;
      }
    }

    res.rely = std::move(r);
    res.guarantee = std::move(g);
    res.outlines = std::move(outlines);
    res.verdict = res.converged ? check_post(res, *prog_.post) : Verdict::NotVerified;
    res.metrics.ops = counter_.total();
    res.metrics.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
  }

  /// Verified iff no state in the meet of all thread exit assertions violates
  /// `post`.
  Verdict check_post(const Result& res, const Cond& post) const {
    Elem final_state = dom_.top();
    for (std::size_t t = 0; t < prog_.threads.size(); ++t) {
      final_state = dom_.meet(final_state, res.outlines[t][prog_.threads[t].exit_point]);
    }
    const Elem bad = dom_.filter(*negate(std::make_shared<Cond>(post)), final_state);
    return dom_.is_bottom(bad) ? Verdict::Verified : Verdict::NotVerified;
  }

 private:
  static D make_domain(const Program& p, const AnalysisConfig& cfg, OpCounter* counter) {
    if constexpr (std::is_same_v<D, PowersetDomain>) {
      return D(p.num_vars(), cfg.max_disjuncts, counter);
    } else {
      return D(p.num_vars(), counter);
    }
  }

  static CondWritesOptions cw_options(const AnalysisConfig& cfg) {
    CondWritesOptions o;
    o.prune_stabilise = cfg.prune_stabilise;
    o.close_constrained_only = cfg.close_constrained_only;
    o.close_skip_covered = cfg.close_skip_covered;
    o.fuel = cfg.fuel_inner;
    return o;
  }

  void record(ProofOutline<Elem>& outline, PointId p, const Elem& d) const {
    Elem& slot = outline[p];
    slot = dom_.is_bottom(slot) ? d : dom_.join(slot, d);
  }

  // The rely component is fixed within a thread and is not joined.
  Triple join(const Triple& a, const Triple& b) const {
    return Triple{dom_.join(a.d, b.d), a.r, cw_.join(a.g, b.g)};
  }

  const Program& prog_;
  AnalysisConfig cfg_;
  OpCounter counter_;
  D dom_;
  CondWrites<D> cw_;
  std::size_t n_ = 0;
  std::vector<VarSet> rely_vars_;
};

}  // namespace cwrg
