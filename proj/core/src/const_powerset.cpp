// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/const_powerset.hpp"

#include <algorithm>
#include <sstream>

#include "cwrg/errors.hpp"
#include "cwrg/semantics.hpp"

namespace cwrg {

bool ConstPowerset::contains(const State& s) const {
  return std::any_of(disjuncts_.begin(), disjuncts_.end(), [&](const ConstMap& m) { return m.contains(s); });
}

PowersetDomain::PowersetDomain(std::size_t num_vars, std::size_t max_disjuncts, OpCounter* counter)
    : num_vars_(num_vars), max_disjuncts_(max_disjuncts), counter_(counter) {
  if (max_disjuncts_ == 0) throw ConfigError("max-disjuncts must be at least 1");
}

ConstPowerset PowersetDomain::top() const { return make({ConstMap::top(num_vars_)}); }

ConstPowerset PowersetDomain::make(std::vector<ConstMap> maps) const {
  std::erase_if(maps, [](const ConstMap& m) { return m.is_bottom(); });
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  std::vector<bool> subsumed(maps.size(), false);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size() && !subsumed[i]; ++j) {
      subsumed[i] = i != j && const_map::leq(maps[i], maps[j]);
    }
  }
  std::vector<ConstMap> kept;
  kept.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!subsumed[i]) kept.push_back(std::move(maps[i]));
  }
  if (kept.size() > max_disjuncts_) {
    ConstMap all = ConstMap::bottom();
    for (const auto& m : kept) all = const_map::join(all, m);
    kept.assign(1, all);
  }
  ConstPowerset out;
  out.disjuncts_ = std::move(kept);
  return out;
}

bool PowersetDomain::leq(const Elem& a, const Elem& b) const {
  for (const auto& x : a.disjuncts()) {
    const bool covered = std::any_of(b.disjuncts().begin(), b.disjuncts().end(),
                                     [&](const ConstMap& y) { return const_map::leq(x, y); });
    if (!covered) return false;
  }
  return true;
}

ConstPowerset PowersetDomain::join(const Elem& a, const Elem& b) const {
  if (counter_) ++counter_->joins;
  std::vector<ConstMap> maps = a.disjuncts();
  maps.insert(maps.end(), b.disjuncts().begin(), b.disjuncts().end());
  return make(std::move(maps));
}

ConstPowerset PowersetDomain::meet(const Elem& a, const Elem& b) const {
  if (counter_) ++counter_->meets;
  std::vector<ConstMap> maps;
  maps.reserve(a.disjuncts().size() * b.disjuncts().size());
  for (const auto& x : a.disjuncts()) {
    for (const auto& y : b.disjuncts()) maps.push_back(const_map::meet(x, y));
  }
  return make(std::move(maps));
}

ConstPowerset PowersetDomain::post(const Assign& a, const Elem& d) const {
  std::vector<ConstMap> maps;
  maps.reserve(d.disjuncts().size());
  for (const auto& m : d.disjuncts()) maps.push_back(const_map::post(a, m));
  return make(std::move(maps));
}

ConstPowerset PowersetDomain::havoc(const Elem& d, VarSet vars) const {
  if (vars.empty()) return d;
  std::vector<ConstMap> maps;
  maps.reserve(d.disjuncts().size());
  for (const auto& m : d.disjuncts()) maps.push_back(const_map::havoc(m, vars));
  return make(std::move(maps));
}

ConstPowerset PowersetDomain::filter(const Cond& b, const Elem& d) const {
  return filter_nnf(*negation_normal_form(std::make_shared<Cond>(b)), d);
}

ConstPowerset PowersetDomain::filter_nnf(const Cond& b, const Elem& d) const {
  if (d.is_bottom()) return d;
  switch (b.kind) {
    case Cond::Kind::True:
      return d;
    case Cond::Kind::False:
      return bottom();
    case Cond::Kind::Cmp: {
      std::vector<ConstMap> maps;
      maps.reserve(d.disjuncts().size());
      for (const auto& m : d.disjuncts()) maps.push_back(const_map::filter_cmp(b, m));
      return make(std::move(maps));
    }
    case Cond::Kind::And:
      return filter_nnf(*b.rhs, filter_nnf(*b.lhs, d));
    case Cond::Kind::Or:
      return join(filter_nnf(*b.lhs, d), filter_nnf(*b.rhs, d));
    case Cond::Kind::Not:
      break;
  }
  return d;
}

std::string PowersetDomain::to_string(const Elem& d, const std::vector<std::string>& names,
                                      const Glyphs& g) const {
  if (d.is_bottom()) return g.bottom;
  if (d.is_top()) return g.top;
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < d.disjuncts().size(); ++k) {
    os << (k ? "; " : "") << const_map::to_string(d.disjuncts()[k], names, g);
  }
  os << '}';
  return os.str();
}

}  // namespace cwrg
