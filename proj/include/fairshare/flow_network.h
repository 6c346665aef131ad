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

// Max-flow kernel (Dinic blocking flows) over an exact capacity type.
//
// Cap must be an ordered field-like type constructible from int: the
// solver instantiates it with Rational, tests also use std::int64_t.
// Augmentation order is fixed by arc insertion order, so results are
// reproducible for a given network.

#ifndef FAIRSHARE_FLOW_NETWORK_H_
#define FAIRSHARE_FLOW_NETWORK_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairshare/errors.h"

namespace fairshare {

template <typename Cap>
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Cap capacity;
    Cap lower;
    bool unbounded;
  };

  FlowNetwork(int vertex_count, int source, int sink)
      : vertex_count_(vertex_count), source_(source), sink_(sink) {}

  int add_vertex() { return vertex_count_++; }

  int add_arc(int from, int to, Cap capacity, Cap lower = Cap(0)) {
    arcs_.push_back(Arc{from, to, std::move(capacity), std::move(lower), false});
    return static_cast<int>(arcs_.size()) - 1;
  }

  int add_unbounded_arc(int from, int to, Cap lower = Cap(0)) {
    arcs_.push_back(Arc{from, to, Cap(0), std::move(lower), true});
    return static_cast<int>(arcs_.size()) - 1;
  }

  int vertex_count() const { return vertex_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_lower_bounds() const {
    return std::any_of(arcs_.begin(), arcs_.end(),
                       [](const Arc& a) { return a.lower > 0; });
  }

  // Stand-in for infinite capacity: strictly more than any flow the finite
  // arcs can carry.
  Cap unbounded_value() const {
    Cap total(1);
    for (const Arc& a : arcs_) {
      if (!a.unbounded) total += a.capacity;
      total += a.lower;
    }
    return total;
  }

  Cap effective_capacity(const Arc& a) const {
    return a.unbounded ? unbounded_value() : a.capacity;
  }

  void validate() const {
    auto in_range = [&](int v) { return v >= 0 && v < vertex_count_; };
    if (!in_range(source_) || !in_range(sink_) || source_ == sink_) {
      throw InputError("flow network: bad source/sink");
    }
    for (const Arc& a : arcs_) {
      if (!in_range(a.from) || !in_range(a.to)) {
        throw InputError("flow network: arc endpoint out of range");
      }
      if (a.to == source_) throw InputError("flow network: arc into source");
      if (a.from == sink_) throw InputError("flow network: arc out of sink");
      if (a.capacity < 0 || a.lower < 0) {
        throw InputError("flow network: negative capacity or lower bound");
      }
    }
  }

 private:
  int vertex_count_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

template <typename Cap>
struct FlowResult {
  Cap value;
  std::vector<Cap> flow;  // per arc, in insertion order
};

namespace detail {

// Residual graph with paired edges: edge e and e ^ 1 are reverses.
template <typename Cap>
class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), next_(n) {}

  int add_edge(int u, int v, const Cap& cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({v, cap});
    edges_.push_back({u, Cap(0)});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
  }

  const Cap& residual(int e) const { return edges_[e].cap; }
  void set_residual(int e, const Cap& c) { edges_[e].cap = c; }

  Cap run(int s, int t) {
    Cap total(0);
    while (build_levels(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      Cap limit(0);
      for (int id : adj_[s]) limit += edges_[id].cap;
      while (true) {
        Cap pushed = augment(s, t, limit);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Vertices from which t is reachable through positive residual edges.
  std::vector<char> reaching(int t) const {
    std::vector<char> mark(adj_.size(), 0);
    std::vector<int> stack{t};
    mark[t] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : adj_[v]) {
        // id leaves v; its partner id ^ 1 enters v from edges_[id].to.
        int u = edges_[id].to;
        if (!mark[u] && edges_[id ^ 1].cap > 0) {
          mark[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return mark;
  }

 private:
  struct ResidualEdge {
    int to;
    Cap cap;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int id : adj_[v]) {
        const ResidualEdge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap augment(int v, int t, const Cap& limit) {
    if (v == t) return limit;
    for (int& i = next_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      int id = adj_[v][i];
      ResidualEdge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
        Cap pushed = augment(e.to, t, e.cap < limit ? e.cap : limit);
        if (pushed > 0) {
          edges_[id].cap -= pushed;
          edges_[id ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return Cap(0);
  }

  std::vector<ResidualEdge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace detail

template <typename Cap>
FlowResult<Cap> max_flow(const FlowNetwork<Cap>& net) {
  net.validate();
  if (net.has_lower_bounds()) {
    throw InputError("max_flow: network has lower bounds; use "
                     "max_flow_lower_bounds");
  }
  const Cap infinity = net.unbounded_value();
  detail::Dinic<Cap> dinic(net.vertex_count());
  std::vector<int> ids;
  ids.reserve(net.arcs().size());
  for (const auto& a : net.arcs()) {
    ids.push_back(dinic.add_edge(a.from, a.to, a.unbounded ? infinity : a.capacity));
  }
  FlowResult<Cap> result{dinic.run(net.source(), net.sink()), {}};
  result.flow.reserve(ids.size());
  for (int id : ids) result.flow.push_back(dinic.residual(id ^ 1));
  return result;
}

// Inclusion-maximal source side among all minimum cuts: everything that
// cannot reach the sink in the residual network of `flow`, which must be a
// maximum flow. Sorted vertex ids.
template <typename Cap>
std::vector<int> min_cut_max_source(const FlowNetwork<Cap>& net,
                                    const std::vector<Cap>& flow) {
  const int n = net.vertex_count();
  std::vector<std::vector<int>> into(n);  // residual predecessors
  const auto& arcs = net.arcs();
  const Cap infinity = net.unbounded_value();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& a = arcs[k];
    if (flow[k] < (a.unbounded ? infinity : a.capacity)) {
      into[a.to].push_back(a.from);
    }
    if (flow[k] > a.lower) into[a.from].push_back(a.to);
  }
  std::vector<char> reaches(n, 0);
  std::vector<int> stack{net.sink()};
  reaches[net.sink()] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : into[v]) {
      if (!reaches[u]) {
        reaches[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<int> side;
  for (int v = 0; v < n; ++v) {
    if (!reaches[v]) side.push_back(v);
  }
  return side;
}

namespace detail {

// Lower-bound reduction shared by the two functions below. Builds the
// residual graph with a return arc sink->source and super terminals.
template <typename Cap>
struct LowerBoundReduction {
  Dinic<Cap> dinic;
  std::vector<int> arc_edge;
  int return_edge = -1;
  bool feasible = false;

  explicit LowerBoundReduction(const FlowNetwork<Cap>& net)
      : dinic(net.vertex_count() + 2) {
    const int n = net.vertex_count();
    const int super_source = n;
    const int super_sink = n + 1;
    const Cap infinity = net.unbounded_value();
    std::vector<Cap> excess(n, Cap(0));
    bool contradictory = false;
    for (const auto& a : net.arcs()) {
      Cap cap = a.unbounded ? infinity : a.capacity;
      if (cap < a.lower) {
        contradictory = true;
        cap = a.lower;
      }
      arc_edge.push_back(dinic.add_edge(a.from, a.to, cap - a.lower));
      excess[a.to] += a.lower;
      excess[a.from] -= a.lower;
    }
    return_edge = dinic.add_edge(net.sink(), net.source(), infinity);
    Cap required(0);
    for (int v = 0; v < n; ++v) {
      if (excess[v] > 0) {
        dinic.add_edge(super_source, v, excess[v]);
        required += excess[v];
      } else if (excess[v] < 0) {
        dinic.add_edge(v, super_sink, -excess[v]);
      }
    }
    Cap moved = dinic.run(super_source, super_sink);
    feasible = !contradictory && moved == required;
  }

  std::vector<Cap> arc_flows(const FlowNetwork<Cap>& net) const {
    std::vector<Cap> flow;
    flow.reserve(arc_edge.size());
    for (std::size_t k = 0; k < arc_edge.size(); ++k) {
      flow.push_back(net.arcs()[k].lower + dinic.residual(arc_edge[k] ^ 1));
    }
    return flow;
  }
};

template <typename Cap>
Cap net_outflow(const FlowNetwork<Cap>& net, const std::vector<Cap>& flow,
                int v) {
  Cap value(0);
  for (std::size_t k = 0; k < flow.size(); ++k) {
    if (net.arcs()[k].from == v) value += flow[k];
    if (net.arcs()[k].to == v) value -= flow[k];
  }
  return value;
}

}  // namespace detail

// Any source-sink flow meeting every lower bound and capacity (the value
// is free: a return arc sink->source is implied). nullopt if none exists.
template <typename Cap>
std::optional<std::vector<Cap>> feasible_flow_lower_bounds(
    const FlowNetwork<Cap>& net) {
  net.validate();
  detail::LowerBoundReduction<Cap> reduction(net);
  if (!reduction.feasible) return std::nullopt;
  return reduction.arc_flows(net);
}

// Maximum-value flow subject to lower bounds, or nullopt if no feasible
// flow exists.
template <typename Cap>
std::optional<FlowResult<Cap>> max_flow_lower_bounds(
    const FlowNetwork<Cap>& net) {
  net.validate();
  detail::LowerBoundReduction<Cap> reduction(net);
  if (!reduction.feasible) return std::nullopt;
  // Freeze the circulation found so far, then push more source->sink.
  reduction.dinic.set_residual(reduction.return_edge, Cap(0));
  reduction.dinic.set_residual(reduction.return_edge ^ 1, Cap(0));
  reduction.dinic.run(net.source(), net.sink());
  FlowResult<Cap> result{Cap(0), reduction.arc_flows(net)};
  result.value = detail::net_outflow(net, result.flow, net.source());
  return result;
}

}  // namespace fairshare

#endif  // FAIRSHARE_FLOW_NETWORK_H_
