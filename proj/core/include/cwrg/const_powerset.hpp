// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cwrg/const_map.hpp"

namespace cwrg {

/// Finite disjunction of non-bottom constant maps. The empty set is bottom.
/// Kept normalised: sorted, no duplicates, no disjunct below another.
class ConstPowerset {
 public:
  ConstPowerset() = default;

  const std::vector<ConstMap>& disjuncts() const { return disjuncts_; }
  bool is_bottom() const { return disjuncts_.empty(); }
  bool is_top() const { return disjuncts_.size() == 1 && disjuncts_.front().is_top(); }
  bool contains(const State& s) const;

  friend bool operator==(const ConstPowerset&, const ConstPowerset&) = default;

 private:
  friend class PowersetDomain;
  std::vector<ConstMap> disjuncts_;
};

/// Disjunctive completion of the constant domain with a cap on the number of
/// disjuncts. Exceeding the cap collapses the element to the constant-domain
/// join of its disjuncts.
class PowersetDomain {
 public:
  using Elem = ConstPowerset;
  static constexpr std::size_t kDefaultMaxDisjuncts = 64;

  explicit PowersetDomain(std::size_t num_vars, std::size_t max_disjuncts = kDefaultMaxDisjuncts,
                          OpCounter* counter = nullptr);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t max_disjuncts() const { return max_disjuncts_; }
  OpCounter* counter() const { return counter_; }

  Elem top() const;
  Elem bottom() const { return Elem{}; }
  bool is_bottom(const Elem& d) const { return d.is_bottom(); }
  bool is_top(const Elem& d) const { return d.is_top(); }

  /// Hoare order: every disjunct of a lies below some disjunct of b.
  bool leq(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const { return leq(a, b) && leq(b, a); }
  Elem join(const Elem& a, const Elem& b) const;
  Elem meet(const Elem& a, const Elem& b) const;

  Elem post(const Assign& a, const Elem& d) const;
  Elem filter(const Cond& b, const Elem& d) const;
  Elem havoc(const Elem& d, VarSet vars) const;

  bool contains(const Elem& d, const State& s) const { return d.contains(s); }
  std::string to_string(const Elem& d, const std::vector<std::string>& names,
                        const Glyphs& g = Glyphs::unicode()) const;

  /// Builds a normalised element from arbitrary maps (bottoms are dropped).
  Elem make(std::vector<ConstMap> maps) const;
  Elem from_map(const ConstMap& m) const { return make({m}); }

 private:
  Elem filter_nnf(const Cond& b, const Elem& d) const;

  std::size_t num_vars_;
  std::size_t max_disjuncts_;
  OpCounter* counter_;
};

static_assert(StateDomain<PowersetDomain>);

}  // namespace cwrg
