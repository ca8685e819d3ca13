// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "cwrg/ast.hpp"
#include "cwrg/state.hpp"

namespace cwrg {

/// Output glyphs for abstract values.
struct Glyphs {
  std::string mapsto = "↦";
  std::string top = "⊤";
  std::string bottom = "⊥";

  static Glyphs unicode() { return {}; }
  static Glyphs ascii() { return {"|->", "top", "bot"}; }
};

/// Counts lattice join/meet calls. One instance per analysis run.
struct OpCounter {
  std::uint64_t joins = 0;
  std::uint64_t meets = 0;

  std::uint64_t total() const { return joins + meets; }
};

/// Abstract state domain contract. Elements are immutable values; the domain
/// object carries the variable count and an optional operation counter.
///
/// Soundness requirements (checked by the test suite against brute force):
///  - leq(a, b) implies gamma(a) is a subset of gamma(b)
///  - join/meet over-approximate union/intersection
///  - post/filter over-approximate the concrete assignment/guard
///  - havoc(d, V) contains every state agreeing with some state of d outside V,
///    havoc(bottom, V) = bottom, and havoc is monotone in both arguments.
template <typename D>
concept StateDomain = requires(const D& dom, const typename D::Elem& a, const typename D::Elem& b,
                               const Assign& assign, const Cond& cond, VarSet vs, const State& s,
                               const std::vector<std::string>& names, const Glyphs& g) {
  typename D::Elem;
  { dom.num_vars() } -> std::convertible_to<std::size_t>;
  { dom.top() } -> std::same_as<typename D::Elem>;
  { dom.bottom() } -> std::same_as<typename D::Elem>;
  { dom.is_bottom(a) } -> std::same_as<bool>;
  { dom.is_top(a) } -> std::same_as<bool>;
  { dom.leq(a, b) } -> std::same_as<bool>;
  { dom.equal(a, b) } -> std::same_as<bool>;
  { dom.join(a, b) } -> std::same_as<typename D::Elem>;
  { dom.meet(a, b) } -> std::same_as<typename D::Elem>;
  { dom.post(assign, a) } -> std::same_as<typename D::Elem>;
  { dom.filter(cond, a) } -> std::same_as<typename D::Elem>;
  { dom.havoc(a, vs) } -> std::same_as<typename D::Elem>;
  { dom.contains(a, s) } -> std::same_as<bool>;
  { dom.to_string(a, names, g) } -> std::same_as<std::string>;
};

/// Exact enumeration of gamma(d) restricted to the universe product.
template <StateDomain D>
std::vector<State> gamma(const D& dom, const typename D::Elem& d, const Universe& u) {
  std::vector<State> out;
  if (dom.is_bottom(d)) return out;
  u.for_each_state([&](const State& s) {
    if (dom.contains(d, s)) out.push_back(s);
  });
  return out;
}

}  // namespace cwrg
