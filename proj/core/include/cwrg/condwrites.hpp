// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwrg/errors.hpp"
#include "cwrg/state_domain.hpp"

namespace cwrg {

/// Conditional-writes element: one write-condition per variable. A transition
/// (s1, s2) is admitted iff every variable it changes has a write-condition
/// containing s1.
template <typename Elem>
struct Interference {
  std::vector<Elem> conds;

  const Elem& operator[](VarId v) const { return conds[v]; }
  Elem& operator[](VarId v) { return conds[v]; }
  std::size_t size() const { return conds.size(); }

  friend bool operator==(const Interference&, const Interference&) = default;
};

struct CondWritesOptions {
  // Skip supersets of variable sets whose meet with the assertion is bottom.
  bool prune_stabilise = true;
  // close: only consider variable sets constrained in the write-condition.
  bool close_constrained_only = true;
  // close: skip strict supersets once havoc covers the write-condition meet.
  bool close_skip_covered = true;
  // Iteration cap for stabilise_fix and close.
  std::size_t fuel = 1000;
};

template <StateDomain D>
class CondWrites {
 public:
  using Elem = typename D::Elem;
  using Interf = Interference<Elem>;

  explicit CondWrites(const D& dom, CondWritesOptions opts = {}) : dom_(dom), opts_(opts) {}

  const D& domain() const { return dom_; }
  const CondWritesOptions& options() const { return opts_; }

  Interf top() const { return Interf{std::vector<Elem>(dom_.num_vars(), dom_.top())}; }
  Interf bottom() const { return Interf{std::vector<Elem>(dom_.num_vars(), dom_.bottom())}; }

  Interf join(const Interf& a, const Interf& b) const {
    Interf out;
    out.conds.reserve(a.size());
    for (VarId v = 0; v < a.size(); ++v) out.conds.push_back(dom_.join(a[v], b[v]));
    return out;
  }

  Interf meet(const Interf& a, const Interf& b) const {
    Interf out;
    out.conds.reserve(a.size());
    for (VarId v = 0; v < a.size(); ++v) out.conds.push_back(dom_.meet(a[v], b[v]));
    return out;
  }

  bool leq(const Interf& a, const Interf& b) const {
    for (VarId v = 0; v < a.size(); ++v) {
      if (!dom_.leq(a[v], b[v])) return false;
    }
    return true;
  }

  bool equal(const Interf& a, const Interf& b) const { return leq(a, b) && leq(b, a); }

  /// (s1, s2) is in the concretisation of i.
  bool admits(const Interf& i, const State& s1, const State& s2) const {
    for (VarId v = 0; v < i.size(); ++v) {
      if (s1[v] != s2[v] && !dom_.contains(i[v], s1)) return false;
    }
    return true;
  }

  /// Exact enumeration of the concretisation over a universe.
  std::vector<std::pair<State, State>> gamma(const Interf& i, const Universe& u) const {
    const std::vector<State> states = u.states();
    std::vector<std::pair<State, State>> out;
    for (const auto& s1 : states) {
      for (const auto& s2 : states) {
        if (admits(i, s1, s2)) out.emplace_back(s1, s2);
      }
    }
    return out;
  }

  /// One-step stabilisation with precision bound n: transitions updating at
  /// most n variables are handled exactly; larger ones are covered by a single
  /// havoc over all (n+1)-sets whose write-conditions are jointly satisfiable
  /// in d.
  Elem stabilise(const Interf& i, const Elem& d, std::size_t n) const {
    if (dom_.is_bottom(d)) return d;
    const std::size_t nv = dom_.num_vars();
    if (n > nv) throw ConfigError("stabilise: N exceeds the number of variables");

    // memo[V] = d meet (meet of i(v) for v in V); built incrementally from
    // V minus its largest member.
    std::unordered_map<std::uint64_t, Elem> memo;
    memo.emplace(0, d);
    Elem precise = dom_.bottom();
    Elem coarse = dom_.bottom();
    VarSet coarse_vars;

    for_each_subset_by_size(VarSet::all(nv), std::min(n + 1, nv), [&](VarSet vs) {
      if (vs.empty()) return;  // contributes d itself
      const VarId last = vs.max();
      VarSet parent = vs;
      parent.erase(last);
      if (opts_.prune_stabilise) {
        // Bottom-up: skip vs if any immediate subset was bottom or skipped.
        for (VarId v : vs.members()) {
          VarSet sub = vs;
          sub.erase(v);
          if (!memo.contains(sub.bits())) return;
        }
      }
      Elem m = dom_.meet(memo.at(parent.bits()), i[last]);
      if (dom_.is_bottom(m)) {
        if (!opts_.prune_stabilise) memo.emplace(vs.bits(), std::move(m));
        return;
      }
      if (vs.size() <= n) {
        precise = dom_.join(precise, dom_.havoc(m, vs));
      } else {
        coarse = dom_.join(coarse, m);
        coarse_vars = coarse_vars | vs;
      }
      memo.emplace(vs.bits(), std::move(m));
    });

    Elem out = dom_.join(d, precise);
    if (!coarse_vars.empty()) out = dom_.join(out, dom_.havoc(coarse, coarse_vars));
    return out;
  }

  /// Least fixpoint of stabilise above d.
  Elem stabilise_fix(const Interf& i, const Elem& d, std::size_t n) const {
    Elem cur = d;
    for (std::size_t k = 0; k < opts_.fuel; ++k) {
      Elem next = stabilise(i, cur, n);
      if (dom_.leq(next, cur)) return cur;
      cur = std::move(next);
    }
    throw FuelExhausted("stabilise_fix did not converge within " + std::to_string(opts_.fuel) + " iterations");
  }

  /// Identity everywhere except the assigned variables, which may be written
  /// from any state of d.
  Interf transitions(const Elem& d, const Assign& a) const {
    Interf out = bottom();
    for (VarId v : a.targets) out[v] = d;
    return out;
  }

  /// Weakens write-conditions until the concretisation is transitive: iterate
  ///   i(v) <- join over V of havoc(i(v), V) meet (meet of i(u) for u in V)
  /// for all v simultaneously until nothing changes.
  Interf close(const Interf& input) const {
    Interf cur = input;
    for (std::size_t k = 0; k < opts_.fuel; ++k) {
      Interf next = close_step(cur);
      if (leq(next, cur)) return cur;
      cur = std::move(next);
    }
    throw FuelExhausted("close did not converge within " + std::to_string(opts_.fuel) + " iterations");
  }

  std::string to_string(const Interf& i, const std::vector<std::string>& names,
                        const Glyphs& g = Glyphs::unicode()) const {
    std::ostringstream os;
    os << '[';
    for (VarId v = 0; v < i.size(); ++v) {
      os << (v ? ", " : "") << names[v] << g.mapsto << dom_.to_string(i[v], names, g);
    }
    os << ']';
    return os.str();
  }

 private:
  Interf close_step(const Interf& i) const {
    const std::size_t nv = dom_.num_vars();
    // Write-condition meets over variable sets, shared by all v in one step.
    std::unordered_map<std::uint64_t, Elem> meets;
    meets.emplace(0, dom_.top());
    auto meet_of = [&](auto&& self, VarSet vs) -> const Elem& {
      auto it = meets.find(vs.bits());
      if (it != meets.end()) return it->second;
      VarSet parent = vs;
      parent.erase(vs.max());
      Elem m = parent.empty() ? i[vs.max()] : dom_.meet(self(self, parent), i[vs.max()]);
      return meets.emplace(vs.bits(), std::move(m)).first->second;
    };

    Interf out;
    out.conds.reserve(nv);
    for (VarId v = 0; v < nv; ++v) {
      const Elem& wc = i[v];
      if (dom_.is_bottom(wc)) {
        out.conds.push_back(wc);
        continue;
      }
      VarSet candidates = VarSet::all(nv);
      if (opts_.close_constrained_only) {
        VarSet constrained;
        for (VarId u = 0; u < nv; ++u) {
          if (!dom_.equal(dom_.havoc(wc, VarSet::single(u)), wc)) constrained.insert(u);
        }
        candidates = constrained;
      }
      Elem acc = wc;
      // Sets with a strict subset whose havoc already covers its meet.
      std::unordered_map<std::uint64_t, bool> blocked;
      for_each_subset_by_size(candidates, nv, [&](VarSet vs) {
        bool skip = false;
        if (opts_.close_skip_covered) {
          for (VarId u : vs.members()) {
            VarSet sub = vs;
            sub.erase(u);
            auto it = blocked.find(sub.bits());
            if (it != blocked.end() && it->second) {
              skip = true;
              break;
            }
          }
        }
        if (skip) {
          blocked[vs.bits()] = true;
          return;
        }
        const Elem h = dom_.havoc(wc, vs);
        const Elem& m = meet_of(meet_of, vs);
        if (opts_.close_skip_covered) blocked[vs.bits()] = dom_.leq(m, h);
        if (vs.empty()) return;  // havoc(wc, {}) meet top = wc, already in acc
        acc = dom_.join(acc, dom_.meet(h, m));
      });
      out.conds.push_back(std::move(acc));
    }
    return out;
  }

  const D& dom_;
  CondWritesOptions opts_;
};

}  // namespace cwrg
