// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cwrg/state_domain.hpp"

namespace cwrg {

/// Element of the constant domain: either bottom or a partial map from
/// variables to constants. An unbound variable is unconstrained.
class ConstMap {
 public:
  ConstMap() = default;

  static ConstMap top(std::size_t num_vars);
  static ConstMap bottom();

  bool is_bottom() const { return bottom_; }
  /// True for a non-bottom map with no bindings.
  bool is_top() const;
  std::size_t num_vars() const { return values_.size(); }

  const std::optional<Value>& get(VarId v) const { return values_[v]; }
  void bind(VarId v, Value k) { values_[v] = k; }
  void unbind(VarId v) { values_[v].reset(); }
  /// Variables with a binding.
  VarSet bound() const;

  bool contains(const State& s) const;

  friend auto operator<=>(const ConstMap&, const ConstMap&) = default;
  friend bool operator==(const ConstMap&, const ConstMap&) = default;

 private:
  bool bottom_ = false;
  std::vector<std::optional<Value>> values_;
};

namespace const_map {

bool leq(const ConstMap& a, const ConstMap& b);
ConstMap join(const ConstMap& a, const ConstMap& b);
ConstMap meet(const ConstMap& a, const ConstMap& b);
ConstMap havoc(const ConstMap& d, VarSet vars);
ConstMap post(const Assign& a, const ConstMap& d);

/// Value of `e` if every variable it reads is bound in `d` and no
/// intermediate result overflows.
std::optional<Value> eval_const(const Expr& e, const ConstMap& d);

/// Filter by a single comparison. Decides it when both sides are constant
/// and refines `v == k` / `k == v` to a binding; otherwise returns d.
ConstMap filter_cmp(const Cond& cmp, const ConstMap& d);

std::string to_string(const ConstMap& d, const std::vector<std::string>& names, const Glyphs& g);

}  // namespace const_map

/// The constant propagation domain: per-variable flat lattice.
class ConstDomain {
 public:
  using Elem = ConstMap;

  explicit ConstDomain(std::size_t num_vars, OpCounter* counter = nullptr)
      : num_vars_(num_vars), counter_(counter) {}

  std::size_t num_vars() const { return num_vars_; }
  OpCounter* counter() const { return counter_; }

  Elem top() const { return ConstMap::top(num_vars_); }
  Elem bottom() const { return ConstMap::bottom(); }
  bool is_bottom(const Elem& d) const { return d.is_bottom(); }
  bool is_top(const Elem& d) const { return d.is_top(); }

  bool leq(const Elem& a, const Elem& b) const { return const_map::leq(a, b); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem join(const Elem& a, const Elem& b) const;
  Elem meet(const Elem& a, const Elem& b) const;

  Elem post(const Assign& a, const Elem& d) const { return const_map::post(a, d); }
  Elem filter(const Cond& b, const Elem& d) const;
  Elem havoc(const Elem& d, VarSet vars) const { return const_map::havoc(d, vars); }

  bool contains(const Elem& d, const State& s) const { return d.contains(s); }
  std::string to_string(const Elem& d, const std::vector<std::string>& names,
                        const Glyphs& g = Glyphs::unicode()) const {
    return const_map::to_string(d, names, g);
  }

 private:
  Elem filter_nnf(const Cond& b, const Elem& d) const;

  std::size_t num_vars_;
  OpCounter* counter_;
};

static_assert(StateDomain<ConstDomain>);

}  // namespace cwrg
