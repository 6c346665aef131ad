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

#include <algorithm>
#include <iterator>
#include <string>

#include "fairshare/errors.h"

namespace fairshare {

NodeSet make_node_set(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const NodeSet& s, NodeId id) {
  return std::binary_search(s.begin(), s.end(), id);
}

Graph::Graph(std::vector<NodeId> node_ids, std::vector<Edge> edges) {
  std::sort(node_ids.begin(), node_ids.end());
  for (std::size_t i = 0; i < node_ids.size(); ++i) {
    if (node_ids[i] < 0) {
      throw InputError("negative node id " + std::to_string(node_ids[i]));
    }
    if (i > 0 && node_ids[i] == node_ids[i - 1]) {
      throw InputError("duplicate node id " + std::to_string(node_ids[i]));
    }
  }
  nodes_ = std::move(node_ids);
  adjacency_.assign(nodes_.size(), {});

  for (auto [a, b] : edges) {
    if (a == b) throw InputError("self-loop at node " + std::to_string(a));
    if (!contains(a) || !contains(b)) {
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") references an unknown node");
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw InputError("duplicate edge (" + std::to_string(edges_[i].first) +
                       "," + std::to_string(edges_[i].second) + ")");
    }
  }
  for (auto [a, b] : edges_) {
    std::size_t ia = index_of(a), ib = index_of(b);
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::contains(NodeId id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::size_t Graph::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw InputError("unknown node id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

NodeSet Graph::neighbors(NodeId id) const {
  NodeSet out;
  for (std::size_t j : adjacency_[index_of(id)]) out.push_back(nodes_[j]);
  return out;
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  const auto& adj = adjacency_[index_of(a)];
  return std::binary_search(adj.begin(), adj.end(), index_of(b));
}

std::size_t Graph::degree(NodeId id) const {
  return adjacency_[index_of(id)].size();
}

void Graph::validate_subset(const NodeSet& s) const {
  for (NodeId id : s) index_of(id);
}

NodeSet neighborhood(const Graph& g, const NodeSet& s) {
  std::vector<char> mark(g.size(), 0);
  for (NodeId id : s) {
    for (std::size_t j : g.adjacent_indices(g.index_of(id))) mark[j] = 1;
  }
  NodeSet out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (mark[j]) out.push_back(g.id_at(j));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const NodeSet& s) {
  if (s.empty()) throw InputError("induced subgraph of an empty node set");
  g.validate_subset(s);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (set_contains(s, e.first) && set_contains(s, e.second)) {
      edges.push_back(e);
    }
  }
  return Graph(s, std::move(edges));
}

bool is_independent(const Graph& g, const NodeSet& s) {
  g.validate_subset(s);
  for (NodeId id : s) {
    for (std::size_t j : g.adjacent_indices(g.index_of(id))) {
      if (set_contains(s, g.id_at(j))) return false;
    }
  }
  return true;
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  std::vector<char> seen(g.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    NodeSet comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(g.id_at(v));
      for (std::size_t w : g.adjacent_indices(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(make_node_set(std::move(comp)));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.size() > 0 && connected_components(g).size() == 1;
}

void require_connected(const Graph& g) {
  if (g.size() < 2) throw InputError("graph must have at least two nodes");
  if (!is_connected(g)) throw InputError("graph must be connected");
}

}  // namespace fairshare
