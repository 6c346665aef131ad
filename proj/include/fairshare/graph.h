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

// Undirected simple graphs over externally supplied integer node ids.
//
// Every node set crossing the public API is a NodeSet: a sorted vector of
// distinct ids. Internally nodes are addressed by their position in the
// sorted id list ("index"), which is what the flow reductions and the
// simulator use.

#ifndef FAIRSHARE_GRAPH_H_
#define FAIRSHARE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace fairshare {

using NodeId = std::int64_t;
using NodeSet = std::vector<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

// Sorts and deduplicates.
NodeSet make_node_set(std::vector<NodeId> ids);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool set_contains(const NodeSet& s, NodeId id);

class Graph {
 public:
  Graph() = default;

  // Throws InputError on negative or duplicate ids, self-loops, duplicate
  // edges, or edges touching unknown ids. Connectivity is not required
  // here; see require_connected.
  Graph(std::vector<NodeId> node_ids, std::vector<Edge> edges);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  // Canonical edges (smaller id first), sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(NodeId id) const;
  // Throws InputError for unknown ids.
  std::size_t index_of(NodeId id) const;
  NodeId id_at(std::size_t index) const { return nodes_[index]; }
  // Neighbor indices in ascending order.
  const std::vector<std::size_t>& adjacent_indices(std::size_t index) const {
    return adjacency_[index];
  }
  NodeSet neighbors(NodeId id) const;
  bool adjacent(NodeId a, NodeId b) const;
  std::size_t degree(NodeId id) const;

  // Throws InputError if any id in `s` is unknown.
  void validate_subset(const NodeSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// N_S: union of the neighborhoods of the nodes in s. May intersect s.
NodeSet neighborhood(const Graph& g, const NodeSet& s);

// G_S. The result need not be connected. Throws InputError on empty s.
Graph induced_subgraph(const Graph& g, const NodeSet& s);

bool is_independent(const Graph& g, const NodeSet& s);

// Ordered by smallest contained id.
std::vector<NodeSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Top-level model assumption: connected with at least two nodes.
void require_connected(const Graph& g);

}  // namespace fairshare

#endif  // FAIRSHARE_GRAPH_H_
