// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairshare/polymatroid.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fairshare/errors.h"
#include "oracles.h"

namespace fairshare {
namespace {

Graph path3() { return Graph({1, 2, 3}, {{1, 2}, {2, 3}}); }
// Center 1, leaves 2, 3, 4.
Graph star() { return Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}}); }

Endowments ones(const Graph& g) {
  std::map<NodeId, Rational> m;
  for (NodeId id : g.nodes()) m[id] = 1;
  return make_endowments(m);
}

RateVector rates(std::initializer_list<std::pair<const NodeId, Rational>> l) {
  return RateVector(l);
}

TEST(PolymatroidTest, EndowmentValidation) {
  Graph g = path3();
  EXPECT_NO_THROW(validate_endowments(g, ones(g)));
  EXPECT_THROW(validate_endowments(g, make_endowments({{1, 1}, {2, 1}})),
               InputError);
  EXPECT_THROW(validate_endowments(
                   g, make_endowments({{1, 1}, {2, 0}, {3, 1}})),
               InputError);
  EXPECT_THROW(validate_endowments(
                   g, make_endowments({{1, 1}, {2, 1}, {3, 1}, {4, 1}})),
               InputError);
  EXPECT_THROW(validate_endowments(
                   g, make_endowments({{1, 1}, {2, 2}, {3, 1}}, Rational(1))),
               InputError);
  EXPECT_EQ(make_endowments({{1, 2}, {2, 5}}).bound, Rational(5));
}

TEST(PolymatroidTest, FValueExamples) {
  Graph g = path3();
  Endowments d = ones(g);
  EXPECT_EQ(f_value(g, d, {2}), 2);
  EXPECT_EQ(f_value(g, d, {1, 3}), 1);
  EXPECT_EQ(f_value(g, d, {}), 0);
  EXPECT_EQ(f_value(g, d, g.nodes()), 3);
  EXPECT_THROW(f_value(g, d, {7}), InputError);
}

TEST(PolymatroidTest, SubmodularityExamples) {
  Graph g = path3();
  Endowments d = ones(g);
  EXPECT_LE(f_value(g, d, {}) + f_value(g, d, {1, 3}),
            f_value(g, d, {1}) + f_value(g, d, {3}));
  Graph s = star();
  Endowments ds = ones(s);
  EXPECT_EQ(f_value(s, ds, {3}) + f_value(s, ds, {2, 3, 4}),
            f_value(s, ds, {2, 3}) + f_value(s, ds, {3, 4}));
}

TEST(PolymatroidTest, SubmodularOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 9;
    Graph g = oracle::random_connected_graph(n, 0.3, rng);
    Endowments d = oracle::random_endowments(g, rng);
    SubmodularityReport rep = check_submodular(g, d, 50, trial);
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_GE(rep.pairs_checked, 50u);
  }
  Graph big = oracle::random_connected_graph(14, 0.2, rng);
  SubmodularityReport rep =
      check_submodular(big, oracle::random_endowments(big, rng), 200, 5);
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_EQ(rep.pairs_checked, 200u);
}

TEST(PolymatroidTest, BaseMembershipExamples) {
  Graph g = path3();
  Endowments d = ones(g);
  RateVector good = rates({{1, Rational(1, 2)}, {2, 2}, {3, Rational(1, 2)}});
  RateVector bad = rates({{1, 1}, {2, 1}, {3, 1}});
  EXPECT_TRUE(in_base(g, d, good));
  EXPECT_FALSE(in_base(g, d, bad));
  EXPECT_TRUE(in_base_by_cut(g, d, good));
  EXPECT_FALSE(in_base_by_cut(g, d, bad));
  RateVector short_total = rates({{1, Rational(1, 2)}, {2, 1}, {3, 0}});
  EXPECT_FALSE(in_base(g, d, short_total));
  EXPECT_FALSE(in_base_by_cut(g, d, short_total));
  RateVector negative = rates({{1, -1}, {2, 3}, {3, 1}});
  EXPECT_FALSE(in_base(g, d, negative));
  EXPECT_FALSE(in_base_by_cut(g, d, negative));
}

TEST(PolymatroidTest, BaseEnumerationIsCapped) {
  std::vector<NodeId> ids;
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= 25; ++i) {
    ids.push_back(i);
    if (i > 1) edges.emplace_back(i - 1, i);
  }
  Graph g(ids, edges);
  Endowments d = ones(g);
  RateVector r = extreme_point(g, d, g.nodes());
  EXPECT_THROW(in_base(g, d, r), CapacityError);
  EXPECT_TRUE(in_base_by_cut(g, d, r));
}

TEST(PolymatroidTest, ExtremePointExamples) {
  Graph g = path3();
  RateVector r = extreme_point(g, ones(g), {2, 1, 3});
  EXPECT_EQ(r, rates({{1, 1}, {2, 2}, {3, 0}}));
  Graph s = star();
  RateVector rs = extreme_point(s, ones(s), {1, 2, 3, 4});
  EXPECT_EQ(rs, rates({{1, 3}, {2, 1}, {3, 0}, {4, 0}}));
  // Leaves 2 and 3 are symmetric.
  RateVector swapped = extreme_point(s, ones(s), {1, 3, 2, 4});
  EXPECT_EQ(swapped, rates({{1, 3}, {2, 0}, {3, 1}, {4, 0}}));
  EXPECT_THROW(extreme_point(g, ones(g), {1, 2}), InputError);
  EXPECT_THROW(extreme_point(g, ones(g), {1, 1, 2}), InputError);
}

// Extreme points and their midpoints lie in the base; the enumeration
// check, the cut check and the oracle agree everywhere, including on
// perturbed vectors.
TEST(PolymatroidTest, MembershipAgreesWithOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected_graph(2 + trial % 8, 0.35, rng);
    Endowments d = oracle::random_endowments(g, rng);
    std::vector<NodeId> a = g.nodes(), b = g.nodes();
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    RateVector ra = extreme_point(g, d, a), rb = extreme_point(g, d, b);
    RateVector mid, bumped = ra;
    for (NodeId id : g.nodes()) mid[id] = (ra[id] + rb[id]) / 2;
    NodeId first = g.nodes().front(), last = g.nodes().back();
    bumped[first] += Rational(1, 7);
    bumped[last] -= Rational(1, 7);
    for (const RateVector& r : {ra, rb, mid, bumped}) {
      bool expected = oracle::in_base(g, d, r);
      EXPECT_EQ(in_base(g, d, r), expected);
      EXPECT_EQ(in_base_by_cut(g, d, r), expected);
    }
    EXPECT_TRUE(in_base(g, d, ra));
    EXPECT_TRUE(in_base(g, d, mid));
  }
}

}  // namespace
}  // namespace fairshare
