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
#include <string>

#include "fairshare/errors.h"
#include "fairshare/flow.h"

namespace fairshare {
namespace {

using Mask = std::uint64_t;

// f for every subset of the node list, indexed by bitmask over node index.
std::vector<Rational> tabulate_f(const Graph& g, const Endowments& d) {
  const std::size_t n = g.size();
  std::vector<Mask> adj(n, 0);
  std::vector<Rational> endow(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.adjacent_indices(i)) adj[i] |= Mask{1} << j;
    endow[i] = d.at(g.id_at(i));
  }
  const Mask count = Mask{1} << n;
  std::vector<Mask> hood(count, 0);
  std::vector<Rational> f(count);
  for (Mask s = 1; s < count; ++s) {
    Mask low = s & (~s + 1);
    hood[s] = hood[s ^ low] | adj[__builtin_ctzll(low)];
    Mask added = hood[s] & ~hood[s ^ low];
    f[s] = f[s ^ low];
    while (added) {
      Mask bit = added & (~added + 1);
      f[s] += endow[__builtin_ctzll(bit)];
      added ^= bit;
    }
  }
  return f;
}

NodeSet mask_to_set(const Graph& g, Mask m) {
  NodeSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (m >> i & 1) out.push_back(g.id_at(i));
  }
  return out;
}

}  // namespace

const Rational& Endowments::at(NodeId id) const {
  auto it = means.find(id);
  if (it == means.end()) {
    throw InputError("no endowment for node " + std::to_string(id));
  }
  return it->second;
}

Rational Endowments::total(const NodeSet& s) const {
  Rational sum(0);
  for (NodeId id : s) sum += at(id);
  return sum;
}

Endowments make_endowments(std::map<NodeId, Rational> means) {
  Rational bound(0);
  for (const auto& [id, v] : means) bound = std::max(bound, v);
  return Endowments{std::move(means), bound};
}

Endowments make_endowments(std::map<NodeId, Rational> means, Rational bound) {
  return Endowments{std::move(means), std::move(bound)};
}

void validate_endowments(const Graph& g, const Endowments& d) {
  for (NodeId id : g.nodes()) {
    if (d.at(id) <= 0) {
      throw InputError("endowment of node " + std::to_string(id) +
                       " must be positive");
    }
    if (d.at(id) > d.bound) {
      throw InputError("endowment of node " + std::to_string(id) +
                       " exceeds the bound " + to_string(d.bound));
    }
  }
  if (d.means.size() != g.size()) {
    throw InputError("endowments name nodes that are not in the graph");
  }
}

Rational f_value(const Graph& g, const Endowments& d, const NodeSet& s) {
  g.validate_subset(s);
  return d.total(neighborhood(g, s));
}

SubmodularityReport check_submodular(const Graph& g, const Endowments& d,
                                     std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("check_submodular needs at least one trial");
  SubmodularityReport report;
  const std::size_t n = g.size();

  if (n <= kSubmodularExhaustiveCap) {
    report.exhaustive = true;
    std::vector<Rational> f = tabulate_f(g, d);
    const Mask count = Mask{1} << n;
    for (Mask s = 0; s < count; ++s) {
      for (Mask t = s; t < count; ++t) {
        ++report.pairs_checked;
        if (f[s & t] + f[s | t] > f[s] + f[t]) {
          report.violations.emplace_back(mask_to_set(g, s), mask_to_set(g, t));
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < trials; ++k) {
    NodeSet s, t;
    for (NodeId id : g.nodes()) {
      if (coin(rng)) s.push_back(id);
      if (coin(rng)) t.push_back(id);
    }
    ++report.pairs_checked;
    Rational lhs = f_value(g, d, set_intersection(s, t)) +
                   f_value(g, d, set_union(s, t));
    Rational rhs = f_value(g, d, s) + f_value(g, d, t);
    if (lhs > rhs) report.violations.emplace_back(s, t);
  }
  return report;
}

bool in_base(const Graph& g, const Endowments& d, const RateVector& r) {
  const std::size_t n = g.size();
  if (n > kBaseEnumerationCap) {
    throw CapacityError("in_base enumerates 2^N subsets and is capped at " +
                        std::to_string(kBaseEnumerationCap) +
                        " nodes; use in_base_by_cut for larger graphs");
  }
  std::vector<Rational> rate(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = r.find(g.id_at(i));
    if (it == r.end()) {
      throw InputError("rate vector misses node " + std::to_string(g.id_at(i)));
    }
    if (it->second < 0) return false;
    rate[i] = it->second;
  }
  // Walk all subsets in Gray-code order, maintaining f(S) incrementally
  // through per-node neighbor counts.
  // The full set is included; its inequality is implied by the final
  // equality test.
  std::vector<Rational> endow(n);
  for (std::size_t i = 0; i < n; ++i) endow[i] = d.at(g.id_at(i));
  std::vector<int> covered(n, 0);
  std::vector<char> in_set(n, 0);
  Rational f(0), sum(0), total_rate(0);
  for (const Rational& x : rate) total_rate += x;
  const Mask steps = Mask{1} << n;
  for (Mask k = 1; k < steps; ++k) {
    const std::size_t flip = __builtin_ctzll(k);
    const bool adding = !in_set[flip];
    in_set[flip] = adding;
    for (std::size_t j : g.adjacent_indices(flip)) {
      if (adding) {
        if (covered[j]++ == 0) f += endow[j];
      } else {
        if (--covered[j] == 0) f -= endow[j];
      }
    }
    if (adding) {
      sum += rate[flip];
    } else {
      sum -= rate[flip];
    }
    if (sum > f) return false;
  }
  return total_rate == f_value(g, d, g.nodes());
}

bool in_base_by_cut(const Graph& g, const Endowments& d, const RateVector& r) {
  Rational total(0);
  for (NodeId id : g.nodes()) {
    auto it = r.find(id);
    if (it == r.end()) {
      throw InputError("rate vector misses node " + std::to_string(id));
    }
    if (it->second < 0) return false;
    total += it->second;
  }
  if (total != f_value(g, d, g.nodes())) return false;
  return min_weighted_deficiency(g, d, r, g.nodes()).value >= 0;
}

RateVector extreme_point(const Graph& g, const Endowments& d,
                         const std::vector<NodeId>& order) {
  NodeSet sorted = make_node_set(order);
  if (order.size() != g.size() || sorted != g.nodes()) {
    throw InputError("extreme_point needs a permutation of all node ids");
  }
  RateVector r;
  std::vector<char> claimed(g.size(), 0);
  for (NodeId id : order) {
    Rational gain(0);
    for (std::size_t j : g.adjacent_indices(g.index_of(id))) {
      if (!claimed[j]) {
        claimed[j] = 1;
        gain += d.at(g.id_at(j));
      }
    }
    r[id] = gain;
  }
  return r;
}

}  // namespace fairshare
