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

#include "fairshare/flow.h"

#include <algorithm>
#include <string>

#include "fairshare/errors.h"

namespace fairshare {

DeficiencyResult min_weighted_deficiency(const Graph& g, const Endowments& d,
                                         const RateVector& weights,
                                         const NodeSet& restrict) {
  if (restrict.empty()) throw InputError("deficiency over an empty node set");
  g.validate_subset(restrict);
  const int m = static_cast<int>(restrict.size());
  constexpr int kSource = 0;
  constexpr int kSink = 1;
  auto select = [](int k) { return 2 + k; };
  auto resource = [m](int k) { return 2 + m + k; };

  FlowNetwork<Rational> net(2 + 2 * m, kSource, kSink);
  Rational positive_weight(0);
  for (int k = 0; k < m; ++k) {
    auto it = weights.find(restrict[k]);
    if (it == weights.end()) {
      throw InputError("no weight for node " + std::to_string(restrict[k]));
    }
    const Rational& w = it->second;
    if (w > 0) {
      net.add_arc(kSource, select(k), w);
      positive_weight += w;
    } else if (w < 0) {
      net.add_arc(select(k), kSink, -w);
    }
  }
  for (int k = 0; k < m; ++k) {
    net.add_arc(resource(k), kSink, d.at(restrict[k]));
  }
  for (int k = 0; k < m; ++k) {
    for (std::size_t j : g.adjacent_indices(g.index_of(restrict[k]))) {
      auto pos = std::lower_bound(restrict.begin(), restrict.end(), g.id_at(j));
      if (pos == restrict.end() || *pos != g.id_at(j)) continue;
      net.add_unbounded_arc(select(k),
                            resource(static_cast<int>(pos - restrict.begin())));
    }
  }

  FlowResult<Rational> flow = max_flow(net);
  std::vector<int> side = min_cut_max_source(net, flow.flow);
  DeficiencyResult result{flow.value - positive_weight, {}};
  for (int v : side) {
    if (v >= 2 && v < 2 + m) result.set.push_back(restrict[v - 2]);
  }
  return result;
}

DeficiencyResult min_deficiency_set(const Graph& g, const Endowments& d,
                                    const Rational& lambda,
                                    const NodeSet& restrict) {
  if (restrict.empty()) throw InputError("deficiency over an empty node set");
  if (lambda <= 0) throw InputError("lambda must be positive");
  RateVector weights;
  for (NodeId id : restrict) weights[id] = lambda * d.at(id);
  DeficiencyResult best = min_weighted_deficiency(g, d, weights, restrict);
  if (!best.set.empty()) return best;

  // Only the empty set attains the minimum; report the best singleton.
  Graph sub = induced_subgraph(g, restrict);
  bool first = true;
  for (NodeId id : restrict) {
    Rational value = f_value(sub, d, {id}) - lambda * d.at(id);
    if (first || value < best.value) {
      best = {value, {id}};
      first = false;
    }
  }
  return best;
}

std::optional<TransferMap> transportation(
    const std::map<NodeId, Rational>& supplies,
    const std::map<NodeId, Rational>& demands,
    const std::vector<std::pair<NodeId, NodeId>>& allowed) {
  Rational supply_total(0), demand_total(0);
  for (const auto& [id, s] : supplies) {
    if (s < 0) throw InputError("negative supply at node " + std::to_string(id));
    supply_total += s;
  }
  for (const auto& [id, q] : demands) {
    if (q < 0) throw InputError("negative demand at node " + std::to_string(id));
    demand_total += q;
  }
  if (supply_total != demand_total) {
    throw InputError("transportation totals differ: supplies " +
                     to_string(supply_total) + " vs demands " +
                     to_string(demand_total));
  }

  constexpr int kSource = 0;
  constexpr int kSink = 1;
  FlowNetwork<Rational> net(2, kSource, kSink);
  std::map<NodeId, int> supplier, receiver;
  for (const auto& [id, s] : supplies) {
    supplier[id] = net.add_vertex();
    net.add_arc(kSource, supplier[id], s, s);
  }
  for (const auto& [id, q] : demands) {
    receiver[id] = net.add_vertex();
    net.add_arc(receiver[id], kSink, q, q);
  }
  std::vector<std::pair<int, std::pair<NodeId, NodeId>>> edge_arcs;
  for (const auto& [from, to] : allowed) {
    auto su = supplier.find(from);
    auto re = receiver.find(to);
    if (su == supplier.end() || re == receiver.end()) {
      throw InputError("transportation edge (" + std::to_string(from) + "," +
                       std::to_string(to) + ") outside supplier/receiver sets");
    }
    edge_arcs.push_back(
        {net.add_unbounded_arc(su->second, re->second), {from, to}});
  }

  auto flow = feasible_flow_lower_bounds(net);
  if (!flow) return std::nullopt;
  TransferMap out;
  for (const auto& [arc, key] : edge_arcs) {
    const Rational& amount = (*flow)[arc];
    if (amount > 0) out[key] += amount;
  }
  return out;
}

}  // namespace fairshare
