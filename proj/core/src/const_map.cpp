// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cwrg/const_map.hpp"

#include <sstream>

#include "cwrg/semantics.hpp"

namespace cwrg {

ConstMap ConstMap::top(std::size_t num_vars) {
  ConstMap m;
  m.values_.resize(num_vars);
  return m;
}

ConstMap ConstMap::bottom() {
  ConstMap m;
  m.bottom_ = true;
  return m;
}

bool ConstMap::is_top() const {
  if (bottom_) return false;
  for (const auto& v : values_) {
    if (v) return false;
  }
  return true;
}

VarSet ConstMap::bound() const {
  VarSet s;
  for (VarId v = 0; v < values_.size(); ++v) {
    if (values_[v]) s.insert(v);
  }
  return s;
}

bool ConstMap::contains(const State& s) const {
  if (bottom_) return false;
  for (VarId v = 0; v < values_.size(); ++v) {
    if (values_[v] && *values_[v] != s[v]) return false;
  }
  return true;
}

namespace const_map {

bool leq(const ConstMap& a, const ConstMap& b) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  for (VarId v = 0; v < b.num_vars(); ++v) {
    if (b.get(v) && a.get(v) != b.get(v)) return false;
  }
  return true;
}

ConstMap join(const ConstMap& a, const ConstMap& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  ConstMap out = a;
  for (VarId v = 0; v < a.num_vars(); ++v) {
    if (a.get(v) != b.get(v)) out.unbind(v);
  }
  return out;
}

ConstMap meet(const ConstMap& a, const ConstMap& b) {
  if (a.is_bottom() || b.is_bottom()) return ConstMap::bottom();
  ConstMap out = a;
  for (VarId v = 0; v < a.num_vars(); ++v) {
    const auto& bv = b.get(v);
    if (!bv) continue;
    if (a.get(v) && *a.get(v) != *bv) return ConstMap::bottom();
    out.bind(v, *bv);
  }
  return out;
}

ConstMap havoc(const ConstMap& d, VarSet vars) {
  if (d.is_bottom()) return d;
  ConstMap out = d;
  for (VarId v : vars.members()) out.unbind(v);
  return out;
}

std::optional<Value> eval_const(const Expr& e, const ConstMap& d) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::Var:
      return d.get(e.var);
    case Expr::Kind::Binary:
      break;
  }
  auto l = eval_const(*e.lhs, d);
  if (!l) return std::nullopt;
  auto r = eval_const(*e.rhs, d);
  if (!r) return std::nullopt;
  return apply_binary(e.op, *l, *r);
}

ConstMap post(const Assign& a, const ConstMap& d) {
  if (d.is_bottom()) return d;
  std::vector<std::optional<Value>> rhs;
  rhs.reserve(a.exprs.size());
  for (const auto& e : a.exprs) rhs.push_back(eval_const(*e, d));
  ConstMap out = d;
  for (std::size_t k = 0; k < a.targets.size(); ++k) {
    if (rhs[k]) {
      out.bind(a.targets[k], *rhs[k]);
    } else {
      out.unbind(a.targets[k]);
    }
  }
  return out;
}

ConstMap filter_cmp(const Cond& cmp, const ConstMap& d) {
  if (d.is_bottom()) return d;
  const auto l = eval_const(*cmp.lhs_expr, d);
  const auto r = eval_const(*cmp.rhs_expr, d);
  if (l && r) return apply_cmp(cmp.cmp, *l, *r) ? d : ConstMap::bottom();
  if (cmp.cmp == CmpOp::Eq) {
    if (!l && r && cmp.lhs_expr->kind == Expr::Kind::Var) {
      ConstMap out = d;
      out.bind(cmp.lhs_expr->var, *r);
      return out;
    }
    if (l && !r && cmp.rhs_expr->kind == Expr::Kind::Var) {
      ConstMap out = d;
      out.bind(cmp.rhs_expr->var, *l);
      return out;
    }
  }
  return d;
}

std::string to_string(const ConstMap& d, const std::vector<std::string>& names, const Glyphs& g) {
  if (d.is_bottom()) return g.bottom;
  if (d.is_top()) return g.top;
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (VarId v = 0; v < d.num_vars(); ++v) {
    if (!d.get(v)) continue;
    os << (first ? "" : ", ") << names[v] << g.mapsto << *d.get(v);
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace const_map

ConstMap ConstDomain::join(const Elem& a, const Elem& b) const {
  if (counter_) ++counter_->joins;
  return const_map::join(a, b);
}

ConstMap ConstDomain::meet(const Elem& a, const Elem& b) const {
  if (counter_) ++counter_->meets;
  return const_map::meet(a, b);
}

ConstMap ConstDomain::filter(const Cond& b, const Elem& d) const {
  return filter_nnf(*negation_normal_form(std::make_shared<Cond>(b)), d);
}

ConstMap ConstDomain::filter_nnf(const Cond& b, const Elem& d) const {
  if (d.is_bottom()) return d;
  switch (b.kind) {
    case Cond::Kind::True:
      return d;
    case Cond::Kind::False:
      return bottom();
    case Cond::Kind::Cmp:
      return const_map::filter_cmp(b, d);
    case Cond::Kind::And:
      return filter_nnf(*b.rhs, filter_nnf(*b.lhs, d));
    case Cond::Kind::Or:
      return join(filter_nnf(*b.lhs, d), filter_nnf(*b.rhs, d));
    case Cond::Kind::Not:
      break;
  }
  // Unreachable after normalisation.
  return d;
}

}  // namespace cwrg
