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

#include "fairshare/verify.h"

#include <algorithm>
#include <random>

#include "fairshare/errors.h"
#include "fairshare/flow_network.h"

namespace fairshare {
namespace {

std::string node_label(NodeId id) { return "node " + std::to_string(id); }

}  // namespace

CheckReport check_structure(const Graph& g, const Endowments& d,
                            const LevelDecomposition& dec) {
  CheckReport report;
  report.title = "level structure";
  const std::size_t levels = dec.level_count();
  if (levels == 0 || dec.level_sets.size() != levels) {
    report.add("well_formed", false, "empty or mismatched level lists");
    return report;
  }

  if (levels == 1) {
    report.add("single_level_is_one", dec.levels[0] == 1, {},
               to_string(dec.levels[0]), "1");
    return report;
  }
  report.add("lowest_below_one", dec.levels.front() < 1, {},
             to_string(dec.levels.front()), "1");
  report.add("highest_above_one", dec.levels.back() > 1, {},
             to_string(dec.levels.back()), "1");

  NodeSet q = g.nodes();
  for (std::size_t k = 0; k < levels / 2; ++k) {
    const std::size_t pair = levels - 1 - k;
    const NodeSet& low = dec.level_sets[k];
    const NodeSet& high = dec.level_sets[pair];
    const std::string tag = "[" + std::to_string(k + 1) + "]";

    bool inside = set_intersection(low, q) == low;
    bool independent =
        inside && is_independent(induced_subgraph(g, q), low);
    report.add("independent_in_residual" + tag, independent,
               inside ? "" : "level is not inside Q_k");

    NodeSet hood = set_intersection(neighborhood(g, low), q);
    report.add("paired_level_is_neighborhood" + tag, hood == high,
               "L_{K-k+1} = N_{Q_k}(L_k)");

    Rational product = dec.levels[k] * dec.levels[pair];
    report.add("paired_values_reciprocal" + tag, product == 1, {},
               to_string(product), "1");

    Rational rate_low(0);
    for (NodeId id : low) rate_low += dec.received.at(id);
    Rational endow_high = d.total(high);
    report.add("paired_exchange_balanced" + tag, rate_low == endow_high, {},
               to_string(rate_low), to_string(endow_high));

    q = set_difference(q, set_union(low, high));
  }
  if (levels % 2 == 1) {
    const Rational& middle = dec.levels[levels / 2];
    report.add("middle_level_is_one", middle == 1, {}, to_string(middle), "1");
  }
  return report;
}

CheckReport check_sharing_equilibrium(const Graph& g, const Endowments& d,
                                      const Allocation& alloc,
                                      const LevelDecomposition& dec) {
  CheckReport report;
  report.title = "sharing equilibrium";

  std::map<NodeId, Rational> given, got;
  bool on_edges = true;
  std::string off_edge;
  for (const auto& [key, amount] : alloc.transfers) {
    auto [i, j] = key;
    if (amount < 0 || !g.contains(i) || !g.contains(j) || !g.adjacent(i, j)) {
      if (on_edges) {
        off_edge = std::to_string(i) + "->" + std::to_string(j);
      }
      on_edges = false;
      continue;
    }
    given[i] += amount;
    got[j] += amount;
  }
  report.add("transfers_on_edges", on_edges, off_edge);

  for (NodeId i : g.nodes()) {
    report.add("full_distribution[" + std::to_string(i) + "]",
               given[i] == d.at(i), {}, to_string(given[i]),
               to_string(d.at(i)));
  }
  for (NodeId i : g.nodes()) {
    auto rho = dec.ratios.find(i);
    if (rho == dec.ratios.end()) {
      report.add("received_matches_ratio[" + std::to_string(i) + "]", false,
                 "no ratio for " + node_label(i));
      continue;
    }
    Rational expected = d.at(i) * rho->second;
    report.add("received_matches_ratio[" + std::to_string(i) + "]",
               got[i] == expected, {}, to_string(got[i]), to_string(expected));
  }

  for (const auto& [key, amount] : alloc.transfers) {
    auto [i, j] = key;
    if (amount <= 0 || !g.contains(i) || !g.contains(j)) continue;
    std::optional<Rational> lowest;
    for (NodeId k : g.neighbors(i)) {
      const Rational& rho = dec.ratios.at(k);
      if (!lowest || rho < *lowest) lowest = rho;
    }
    bool ok = lowest && dec.ratios.at(j) == *lowest;
    report.add("gives_to_min_ratio[" + std::to_string(i) + "->" +
                   std::to_string(j) + "]",
               ok, {}, to_string(dec.ratios.at(j)),
               lowest ? to_string(*lowest) : "");
  }
  return report;
}

std::string to_string(StabilityMode mode) {
  return mode == StabilityMode::kExhaustive ? "exhaustive" : "sampled";
}

StabilityMode parse_stability_mode(const std::string& text) {
  if (text == "exhaustive") return StabilityMode::kExhaustive;
  if (text == "sampled") return StabilityMode::kSampled;
  throw InputError("unknown stability mode '" + text + "'");
}

std::optional<RateVector> coalition_improvement(const Graph& g,
                                                const Endowments& d,
                                                const RateVector& reference,
                                                const NodeSet& coalition) {
  if (coalition.empty()) throw InputError("empty coalition");
  g.validate_subset(coalition);

  // A member owed something positive must have a partner inside S.
  for (NodeId j : coalition) {
    if (reference.at(j) <= 0) continue;
    bool has_partner = false;
    for (std::size_t k : g.adjacent_indices(g.index_of(j))) {
      if (set_contains(coalition, g.id_at(k))) {
        has_partner = true;
        break;
      }
    }
    if (!has_partner) return std::nullopt;
  }

  // source -> giver_i (<= D_i) -> taker_j along induced edges -> sink with
  // lower bound reference_j. A feasible flow whose value exceeds the sum of
  // the references gives some member strictly more.
  const int m = static_cast<int>(coalition.size());
  constexpr int kSource = 0;
  constexpr int kSink = 1;
  FlowNetwork<Rational> net(2 + 2 * m, kSource, kSink);
  auto giver = [](int k) { return 2 + k; };
  auto taker = [m](int k) { return 2 + m + k; };
  Rational owed(0);
  for (int k = 0; k < m; ++k) net.add_arc(kSource, giver(k), d.at(coalition[k]));
  for (int k = 0; k < m; ++k) {
    for (std::size_t j : g.adjacent_indices(g.index_of(coalition[k]))) {
      auto pos = std::lower_bound(coalition.begin(), coalition.end(), g.id_at(j));
      if (pos == coalition.end() || *pos != g.id_at(j)) continue;
      net.add_unbounded_arc(giver(k),
                            taker(static_cast<int>(pos - coalition.begin())));
    }
  }
  std::vector<int> sink_arcs;
  for (int k = 0; k < m; ++k) {
    const Rational& r = reference.at(coalition[k]);
    sink_arcs.push_back(net.add_unbounded_arc(taker(k), kSink, r));
    owed += r;
  }

  auto flow = max_flow_lower_bounds(net);
  if (!flow || flow->value <= owed) return std::nullopt;
  RateVector rates;
  for (int k = 0; k < m; ++k) rates[coalition[k]] = flow->flow[sink_arcs[k]];
  return rates;
}

StabilityReport find_blocking_coalition(const Graph& g, const Endowments& d,
                                        const RateVector& reference,
                                        StabilityMode mode, std::size_t budget,
                                        std::uint64_t seed) {
  StabilityReport report;
  report.mode = mode;
  const std::size_t n = g.size();

  auto test = [&](NodeSet coalition) {
    ++report.checked_coalitions;
    if (auto rates = coalition_improvement(g, d, reference, coalition)) {
      report.blocking = BlockingWitness{std::move(coalition), std::move(*rates)};
      return true;
    }
    return false;
  };

  if (mode == StabilityMode::kExhaustive) {
    if (n > kExhaustiveCoalitionCap) {
      throw CapacityError("exhaustive coalition search is capped at " +
                          std::to_string(kExhaustiveCoalitionCap) +
                          " nodes; use sampled mode");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      NodeSet coalition;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) coalition.push_back(g.id_at(i));
      }
      if (test(std::move(coalition))) break;
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    NodeSet coalition;
    while (coalition.empty()) {
      for (NodeId id : g.nodes()) {
        if (coin(rng)) coalition.push_back(id);
      }
    }
    if (test(std::move(coalition))) break;
  }
  return report;
}

StabilityReport find_blocking_coalition(const Graph& g, const Endowments& d,
                                        const LevelDecomposition& dec,
                                        StabilityMode mode, std::size_t budget,
                                        std::uint64_t seed) {
  return find_blocking_coalition(g, d, dec.received, mode, budget, seed);
}

}  // namespace fairshare
