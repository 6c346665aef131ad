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

#include "fairshare/graph.h"

#include <gtest/gtest.h>

#include "fairshare/errors.h"

namespace fairshare {
namespace {

Graph path3() { return Graph({1, 2, 3}, {{1, 2}, {2, 3}}); }

TEST(GraphTest, CanonicalizesEdgesAndAdjacency) {
  Graph g({3, 1, 2}, {{3, 2}, {2, 1}});
  EXPECT_EQ(g.nodes(), (NodeSet{1, 2, 3}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g.neighbors(2), (NodeSet{1, 3}));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.degree(2), 2u);
  EXPECT_EQ(g, path3());
}

TEST(GraphTest, RejectsMalformedInput) {
  EXPECT_THROW(Graph({1, 1}, {}), InputError);
  EXPECT_THROW(Graph({-1, 2}, {}), InputError);
  EXPECT_THROW(Graph({1, 2}, {{1, 1}}), InputError);
  EXPECT_THROW(Graph({1, 2}, {{1, 2}, {2, 1}}), InputError);
  EXPECT_THROW(Graph({1, 2}, {{1, 3}}), InputError);
  EXPECT_THROW(path3().index_of(9), InputError);
  EXPECT_THROW(path3().validate_subset({1, 9}), InputError);
}

TEST(GraphTest, NeighborhoodExcludesSelfUnlessAdjacent) {
  Graph g = path3();
  EXPECT_EQ(neighborhood(g, {1}), (NodeSet{2}));
  EXPECT_EQ(neighborhood(g, {1, 3}), (NodeSet{2}));
  EXPECT_EQ(neighborhood(g, {1, 2}), (NodeSet{1, 2, 3}));
  EXPECT_TRUE(neighborhood(g, {}).empty());
}

TEST(GraphTest, InducedSubgraphKeepsInternalEdges) {
  Graph g({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  Graph sub = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(sub.edges(), (std::vector<Edge>{{1, 2}, {1, 4}}));
  EXPECT_THROW(induced_subgraph(g, {}), InputError);
}

TEST(GraphTest, IndependenceAndComponents) {
  Graph g({1, 2, 3, 4, 5}, {{1, 2}, {3, 4}});
  EXPECT_TRUE(is_independent(g, {1, 3, 5}));
  EXPECT_FALSE(is_independent(g, {3, 4}));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (NodeSet{1, 2}));
  EXPECT_EQ(comps[1], (NodeSet{3, 4}));
  EXPECT_EQ(comps[2], (NodeSet{5}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(require_connected(g), InputError);
  EXPECT_NO_THROW(require_connected(path3()));
  EXPECT_THROW(require_connected(Graph({1}, {})), InputError);
}

TEST(GraphTest, SetHelpersWorkOnSortedSets) {
  EXPECT_EQ(make_node_set({3, 1, 3, 2}), (NodeSet{1, 2, 3}));
  EXPECT_EQ(set_union({1, 3}, {2, 3}), (NodeSet{1, 2, 3}));
  EXPECT_EQ(set_intersection({1, 3}, {2, 3}), (NodeSet{3}));
  EXPECT_EQ(set_difference({1, 2, 3}, {2}), (NodeSet{1, 3}));
  EXPECT_TRUE(set_contains({1, 5}, 5));
}

}  // namespace
}  // namespace fairshare
