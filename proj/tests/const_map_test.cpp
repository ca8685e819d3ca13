// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cwrg/const_map.hpp"
#include "cwrg/semantics.hpp"
#include "support/random_elems.hpp"
#include "support/snippets.hpp"

namespace cwrg {
namespace {

using testing::assign_rxz;
using testing::best_const;
using testing::cond_rxz;
using testing::kRXZ;
using testing::rxz;
using testing::state;

const Universe kBin = Universe::uniform(3, {0, 1});

std::string str(const ConstMap& m) { return const_map::to_string(m, kRXZ, Glyphs::unicode()); }

TEST(ConstMap, Order) {
  EXPECT_TRUE(const_map::leq(rxz({{"r", 0}, {"z", 0}}), rxz({{"r", 0}})));
  EXPECT_FALSE(const_map::leq(rxz({{"r", 0}}), rxz({{"r", 0}, {"z", 0}})));
  EXPECT_FALSE(const_map::leq(rxz({{"r", 0}}), rxz({{"r", 1}})));
  EXPECT_TRUE(const_map::leq(ConstMap::bottom(), rxz({{"r", 1}})));
  EXPECT_FALSE(const_map::leq(ConstMap::top(3), ConstMap::bottom()));
}

TEST(ConstMap, JoinAndMeet) {
  EXPECT_EQ(const_map::join(rxz({{"r", 0}}), rxz({{"r", 1}})), ConstMap::top(3));
  EXPECT_EQ(const_map::join(rxz({{"r", 0}, {"x", 1}}), rxz({{"r", 0}})), rxz({{"r", 0}}));
  EXPECT_EQ(const_map::join(ConstMap::bottom(), rxz({{"x", 1}})), rxz({{"x", 1}}));
  EXPECT_TRUE(const_map::meet(rxz({{"r", 0}, {"z", 0}}), rxz({{"z", 1}})).is_bottom());
  EXPECT_EQ(const_map::meet(rxz({{"r", 0}}), rxz({{"z", 1}})), rxz({{"r", 0}, {"z", 1}}));
}

TEST(ConstMap, GammaOnBinaryUniverse) {
  const ConstDomain dom(3);
  EXPECT_EQ(gamma(dom, rxz({{"z", 0}}), kBin).size(), 4u);
  EXPECT_EQ(gamma(dom, dom.top(), kBin).size(), 8u);
  EXPECT_TRUE(gamma(dom, dom.bottom(), kBin).empty());
  const ConstDomain one(1);
  EXPECT_EQ(gamma(one, one.top(), Universe::uniform(1, {0, 1, 2})).size(), 3u);
}

TEST(ConstMap, PostExamples) {
  EXPECT_EQ(const_map::post(assign_rxz("r := 0"), ConstMap::top(3)), rxz({{"r", 0}}));
  const ConstMap d = rxz({{"r", 0}, {"x", 0}, {"z", 0}});
  EXPECT_EQ(const_map::post(assign_rxz("r := x"), d), d);
  EXPECT_EQ(const_map::post(assign_rxz("r := x"), rxz({{"z", 0}})), rxz({{"z", 0}}));
  EXPECT_EQ(const_map::post(assign_rxz("r, x := x, r"), rxz({{"r", 1}})), rxz({{"x", 1}}));
  EXPECT_TRUE(const_map::post(assign_rxz("r := 1"), ConstMap::bottom()).is_bottom());
}

TEST(ConstMap, PostOverflowForgets) {
  ConstMap d = ConstMap::top(3);
  d.bind(1, Value{1} << 62);
  const ConstMap out = const_map::post(assign_rxz("r := x + x"), d);
  EXPECT_FALSE(out.get(0).has_value());
  EXPECT_EQ(out.get(1), d.get(1));
}

TEST(ConstMap, Filter) {
  const ConstDomain dom(3);
  EXPECT_EQ(dom.filter(*cond_rxz("z == 0"), dom.top()), rxz({{"z", 0}}));
  EXPECT_EQ(dom.filter(*cond_rxz("0 == z"), dom.top()), rxz({{"z", 0}}));
  EXPECT_TRUE(dom.filter(*cond_rxz("z == 1"), rxz({{"z", 0}})).is_bottom());
  EXPECT_TRUE(dom.filter(*cond_rxz("z != 0"), rxz({{"z", 0}})).is_bottom());
  EXPECT_EQ(dom.filter(*cond_rxz("z == 1 || x == 1"), dom.top()), dom.top());
  EXPECT_EQ(dom.filter(*cond_rxz("z == 1 && x == 1"), dom.top()), rxz({{"x", 1}, {"z", 1}}));
  EXPECT_EQ(dom.filter(*cond_rxz("!(z != 1)"), dom.top()), rxz({{"z", 1}}));
  EXPECT_EQ(dom.filter(*cond_rxz("z == 1 || z == 1"), dom.top()), rxz({{"z", 1}}));
  EXPECT_TRUE(dom.filter(*cond_rxz("false"), dom.top()).is_bottom());
}

TEST(ConstMap, HavocMatchesBruteForce) {
  EXPECT_EQ(const_map::havoc(rxz({{"r", 0}, {"z", 0}}), VarSet::single(0)), rxz({{"z", 0}}));
  EXPECT_EQ(const_map::havoc(rxz({{"z", 0}}), VarSet::single(1)), rxz({{"z", 0}}));
  EXPECT_TRUE(const_map::havoc(ConstMap::bottom(), VarSet::all(3)).is_bottom());

  const ConstDomain dom(3);
  std::mt19937 rng(3);
  const auto all = kBin.states();
  for (int k = 0; k < 300; ++k) {
    const ConstMap d = testing::random_map(rng, 3);
    const VarSet vs = testing::random_varset(rng, 3);
    std::set<State> expect;
    for (const auto& s : gamma(dom, d, kBin)) {
      for (const auto& t : all) {
        bool agree = true;
        for (VarId v = 0; v < 3; ++v) agree = agree && (vs.contains(v) || s[v] == t[v]);
        if (agree) expect.insert(t);
      }
    }
    EXPECT_EQ(const_map::havoc(d, vs), best_const(expect, 3)) << str(d);
  }
}

TEST(ConstMap, PostIsSoundOnRandomInputs) {
  const ConstDomain dom(3);
  std::mt19937 rng(4);
  for (int k = 0; k < 500; ++k) {
    const ConstMap d = testing::random_map(rng, 3);
    const Assign a = testing::random_assign(rng, 3);
    const ConstMap out = dom.post(a, d);
    for (const auto& s : gamma(dom, d, kBin)) EXPECT_TRUE(out.contains(exec_assign(a, s)));
  }
}

TEST(ConstMap, Printing) {
  EXPECT_EQ(str(rxz({{"r", 0}, {"z", 0}})), "[r↦0, z↦0]");
  EXPECT_EQ(str(ConstMap::top(3)), "⊤");
  EXPECT_EQ(str(ConstMap::bottom()), "⊥");
  EXPECT_EQ(const_map::to_string(rxz({{"x", -3}}), kRXZ, Glyphs::ascii()), "[x|->-3]");
  EXPECT_EQ(const_map::to_string(ConstMap::top(3), kRXZ, Glyphs::ascii()), "top");
}

TEST(ConstMap, CountsOperations) {
  OpCounter ops;
  const ConstDomain dom(3, &ops);
  dom.join(dom.top(), dom.bottom());
  dom.meet(dom.top(), dom.bottom());
  dom.meet(dom.top(), dom.top());
  dom.post(assign_rxz("r := 1"), dom.top());
  EXPECT_EQ(ops.joins, 1u);
  EXPECT_EQ(ops.meets, 2u);
  EXPECT_EQ(ops.total(), 3u);
}

}  // namespace
}  // namespace cwrg
