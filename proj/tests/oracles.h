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

// Brute-force reference implementations for tests. None of these touch the
// flow code; they enumerate subsets directly and are only usable on tiny
// instances.

#ifndef FAIRSHARE_TESTS_ORACLES_H_
#define FAIRSHARE_TESTS_ORACLES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fairshare/flow_network.h"
#include "fairshare/graph.h"
#include "fairshare/polymatroid.h"
#include "fairshare/rational.h"

namespace fairshare::oracle {

inline std::vector<NodeSet> nonempty_subsets(const NodeSet& base) {
  std::vector<NodeSet> out;
  const std::uint64_t count = std::uint64_t{1} << base.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    NodeSet s;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (mask >> i & 1) s.push_back(base[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// f restricted to G_Q: total endowment of N(S) inside Q.
inline Rational f_within(const Graph& g, const Endowments& d,
                         const NodeSet& q, const NodeSet& s) {
  Rational sum(0);
  for (NodeId id : set_intersection(neighborhood(g, s), q)) sum += d.at(id);
  return sum;
}

struct RatioMin {
  Rational lambda;
  NodeSet maximal;  // union of all minimizers
};

inline RatioMin min_ratio(const Graph& g, const Endowments& d,
                          const NodeSet& q) {
  RatioMin best;
  bool first = true;
  for (const NodeSet& s : nonempty_subsets(q)) {
    Rational ratio = f_within(g, d, q, s) / d.total(s);
    if (first || ratio < best.lambda) {
      best.lambda = ratio;
      best.maximal = s;
      first = false;
    } else if (ratio == best.lambda) {
      best.maximal = set_union(best.maximal, s);
    }
  }
  return best;
}

// Lexicographically optimal base by contraction: the lowest level is the
// maximal minimizer of f(S) / D(S); then f'(T) = f(T + L) - f(L) on the
// rest, and so on. Returns received rates r_i.
inline RateVector lexopt_by_contraction(const Graph& g, const Endowments& d) {
  RateVector r;
  NodeSet fixed;
  NodeSet rest = g.nodes();
  while (!rest.empty()) {
    Rational f_fixed = f_value(g, d, fixed);
    Rational lambda;
    NodeSet level;
    bool first = true;
    for (const NodeSet& s : nonempty_subsets(rest)) {
      Rational ratio = (f_value(g, d, set_union(s, fixed)) - f_fixed) /
                       d.total(s);
      if (first || ratio < lambda) {
        lambda = ratio;
        level = s;
        first = false;
      } else if (ratio == lambda) {
        level = set_union(level, s);
      }
    }
    for (NodeId id : level) r[id] = lambda * d.at(id);
    fixed = set_union(fixed, level);
    rest = set_difference(rest, level);
  }
  return r;
}

// r in the base polytope, by enumerating every subset.
inline bool in_base(const Graph& g, const Endowments& d, const RateVector& r) {
  Rational total(0);
  for (NodeId id : g.nodes()) {
    if (r.at(id) < 0) return false;
    total += r.at(id);
  }
  if (total != f_value(g, d, g.nodes())) return false;
  for (const NodeSet& s : nonempty_subsets(g.nodes())) {
    Rational sum(0);
    for (NodeId id : s) sum += r.at(id);
    if (sum > f_value(g, d, s)) return false;
  }
  return true;
}

// Coalition S blocks `reference` iff reference_S lies in the polymatroid of
// f on G_S without being on its base: then some point of that polymatroid
// dominates it strictly.
inline bool blocks(const Graph& g, const Endowments& d,
                   const RateVector& reference, const NodeSet& coalition) {
  Rational total(0);
  for (NodeId id : coalition) total += reference.at(id);
  if (total >= f_within(g, d, coalition, coalition)) return false;
  for (const NodeSet& t : nonempty_subsets(coalition)) {
    Rational sum(0);
    for (NodeId id : t) sum += reference.at(id);
    if (sum > f_within(g, d, coalition, t)) return false;
  }
  return true;
}

// Minimum s-t cut by enumerating vertex bipartitions.
template <typename Cap>
Cap min_cut(const FlowNetwork<Cap>& net) {
  const int n = net.vertex_count();
  std::optional<Cap> best;
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != net.source() && v != net.sink()) others.push_back(v);
  }
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<bool> side(n, false);
    side[net.source()] = true;
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask >> k & 1) side[others[k]] = true;
    }
    Cap cut(0);
    for (const auto& arc : net.arcs()) {
      if (side[arc.from] && !side[arc.to]) cut += net.effective_capacity(arc);
    }
    if (!best || cut < *best) best = cut;
  }
  return *best;
}

// Gale: demands are satisfiable iff totals balance and every receiver set T
// has demand(T) <= supply(suppliers adjacent to T).
inline bool transport_feasible(
    const std::map<NodeId, Rational>& supplies,
    const std::map<NodeId, Rational>& demands,
    const std::vector<std::pair<NodeId, NodeId>>& allowed) {
  Rational s_total(0), d_total(0);
  for (const auto& [id, v] : supplies) s_total += v;
  for (const auto& [id, v] : demands) d_total += v;
  if (s_total != d_total) return false;
  std::vector<NodeId> receivers;
  for (const auto& [id, v] : demands) receivers.push_back(id);
  for (const NodeSet& t : nonempty_subsets(receivers)) {
    Rational need(0);
    for (NodeId id : t) need += demands.at(id);
    NodeSet feeding;
    for (const auto& [from, to] : allowed) {
      if (set_contains(t, to)) feeding.push_back(from);
    }
    Rational have(0);
    for (NodeId id : make_node_set(feeding)) have += supplies.at(id);
    if (need > have) return false;
  }
  return true;
}

// Random connected graph on ids 1..n: a random spanning tree plus extra
// edges with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (NodeId v = 2; v <= n; ++v) {
    std::uniform_int_distribution<NodeId> parent(1, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (NodeId a = 1; a <= n; ++a) {
    for (NodeId b = a + 1; b <= n; ++b) {
      bool present = false;
      for (const Edge& e : edges) {
        present = present || (e.first == a && e.second == b) ||
                  (e.first == b && e.second == a);
      }
      if (!present && coin(rng)) edges.emplace_back(a, b);
    }
  }
  std::vector<NodeId> ids;
  for (NodeId v = 1; v <= n; ++v) ids.push_back(v);
  return Graph(ids, edges);
}

// Endowments p/q with p in [1, 40] and q in [1, 4].
inline Endowments random_endowments(const Graph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 4);
  std::map<NodeId, Rational> means;
  for (NodeId id : g.nodes()) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    means[id] = v;
  }
  return make_endowments(std::move(means));
}

}  // namespace fairshare::oracle

#endif  // FAIRSHARE_TESTS_ORACLES_H_
