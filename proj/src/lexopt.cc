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

#include "fairshare/lexopt.h"

#include <deque>
#include <string>

#include "fairshare/errors.h"

namespace fairshare {
namespace {

std::string describe(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<std::pair<NodeId, NodeId>> edges_between(const Graph& g,
                                                     const NodeSet& from,
                                                     const NodeSet& to) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId u : from) {
    for (std::size_t j : g.adjacent_indices(g.index_of(u))) {
      if (set_contains(to, g.id_at(j))) out.emplace_back(u, g.id_at(j));
    }
  }
  return out;
}

void merge_transfers(const std::map<NodeId, Rational>& supplies,
                     const std::map<NodeId, Rational>& demands,
                     const std::vector<std::pair<NodeId, NodeId>>& allowed,
                     const std::string& what, TransferMap* out) {
  std::optional<TransferMap> part;
  try {
    part = transportation(supplies, demands, allowed);
  } catch (const InputError& e) {
    throw InternalError("allocation for " + what + ": " + e.what());
  }
  if (!part) {
    throw InternalError("allocation for " + what +
                        " is infeasible; the decomposition is not lex-optimal");
  }
  for (const auto& [key, amount] : *part) (*out)[key] += amount;
}

}  // namespace

std::size_t LevelDecomposition::level_of(NodeId id) const {
  for (std::size_t k = 0; k < level_sets.size(); ++k) {
    if (set_contains(level_sets[k], id)) return k;
  }
  throw InputError("node " + std::to_string(id) + " is in no level set");
}

LevelDecomposition decomposition_from_rates(const Endowments& d,
                                            const RateVector& received) {
  std::map<Rational, NodeSet> groups;
  LevelDecomposition dec;
  for (const auto& [id, r] : received) {
    Rational rho = r / d.at(id);
    groups[rho].push_back(id);
    dec.ratios[id] = rho;
    dec.received[id] = r;
  }
  for (auto& [value, nodes] : groups) {
    dec.levels.push_back(value);
    dec.level_sets.push_back(make_node_set(std::move(nodes)));
  }
  return dec;
}

Rational Allocation::given(NodeId i) const {
  Rational total(0);
  for (const auto& [key, amount] : transfers) {
    if (key.first == i) total += amount;
  }
  return total;
}

Rational Allocation::received(NodeId j) const {
  Rational total(0);
  for (const auto& [key, amount] : transfers) {
    if (key.second == j) total += amount;
  }
  return total;
}

MinRatioResult min_ratio(const Graph& g, const Endowments& d,
                         const NodeSet& restrict) {
  if (restrict.empty()) throw InputError("min_ratio over an empty node set");
  Graph sub = induced_subgraph(g, restrict);
  for (NodeId id : restrict) {
    if (sub.degree(id) == 0) {
      throw StructuralError("deficiency ratio 0: node " + std::to_string(id) +
                            " has no neighbor inside " + describe(restrict));
    }
  }

  MinRatioResult result;
  bool first = true;
  for (NodeId id : restrict) {
    Rational ratio = f_value(sub, d, {id}) / d.at(id);
    if (first || ratio < result.lambda) {
      result.lambda = ratio;
      first = false;
    }
  }
  // Each round either certifies lambda (deficiency 0) or finds a set with a
  // strictly smaller ratio; there are finitely many sets.
  while (true) {
    ++result.iterations;
    DeficiencyResult cut = min_deficiency_set(g, d, result.lambda, restrict);
    if (cut.value == 0) {
      result.set = std::move(cut.set);
      return result;
    }
    if (cut.value > 0) {
      throw InternalError("positive minimum deficiency at a realized ratio");
    }
    result.lambda = f_value(sub, d, cut.set) / d.total(cut.set);
  }
}

LevelDecomposition peel_solve(const Graph& g, const Endowments& d) {
  require_connected(g);
  validate_endowments(g, d);

  RateVector ratio;
  std::deque<NodeSet> pending{g.nodes()};
  while (!pending.empty()) {
    NodeSet q = std::move(pending.front());
    pending.pop_front();
    MinRatioResult low = min_ratio(g, d, q);
    if (low.lambda >= 1) {
      for (NodeId id : q) ratio[id] = Rational(1);
      continue;
    }
    NodeSet high = set_intersection(neighborhood(g, low.set), q);
    if (!set_intersection(low.set, high).empty()) {
      throw InternalError("lowest level " + describe(low.set) +
                          " is not independent");
    }
    Rational inverse = 1 / low.lambda;
    for (NodeId id : low.set) ratio[id] = low.lambda;
    for (NodeId id : high) ratio[id] = inverse;
    NodeSet rest = set_difference(q, set_union(low.set, high));
    if (rest.empty()) continue;
    for (NodeSet& comp : connected_components(induced_subgraph(g, rest))) {
      pending.push_back(std::move(comp));
    }
  }

  RateVector received;
  for (const auto& [id, rho] : ratio) received[id] = rho * d.at(id);
  return decomposition_from_rates(d, received);
}

CheckReport certify_lexopt(const Graph& g, const Endowments& d,
                           const LevelDecomposition& dec) {
  CheckReport report;
  report.title = "lexicographic optimality certificate";

  NodeSet covered;
  bool disjoint = true;
  for (const NodeSet& s : dec.level_sets) {
    if (!set_intersection(covered, s).empty()) disjoint = false;
    covered = set_union(covered, s);
  }
  report.add("levels_partition_nodes", disjoint && covered == g.nodes());
  if (!report.ok()) return report;

  bool increasing = dec.levels.size() == dec.level_sets.size() &&
                    !dec.levels.empty() && dec.levels.front() > 0;
  for (std::size_t k = 1; increasing && k < dec.levels.size(); ++k) {
    increasing = dec.levels[k - 1] < dec.levels[k];
  }
  report.add("levels_strictly_increasing", increasing);

  bool consistent = true;
  std::string first_bad;
  for (std::size_t k = 0; k < dec.level_sets.size() && k < dec.levels.size();
       ++k) {
    for (NodeId id : dec.level_sets[k]) {
      auto rho = dec.ratios.find(id);
      auto r = dec.received.find(id);
      if (rho == dec.ratios.end() || r == dec.received.end() ||
          rho->second != dec.levels[k] || r->second != rho->second * d.at(id)) {
        if (consistent) first_bad = "node " + std::to_string(id);
        consistent = false;
      }
    }
  }
  report.add("ratios_match_levels", consistent, first_bad);
  if (dec.received.size() != g.size()) {
    report.add("rates_cover_nodes", false);
    return report;
  }

  NodeSet prefix;
  Rational f_prev(0);
  for (std::size_t k = 0; k < dec.level_sets.size(); ++k) {
    prefix = set_union(prefix, dec.level_sets[k]);
    Rational f_now = f_value(g, d, prefix);
    Rational lhs(0);
    for (NodeId id : dec.level_sets[k]) lhs += dec.received.at(id);
    Rational rhs = f_now - f_prev;
    report.add("level_prefix_tight[" + std::to_string(k + 1) + "]", lhs == rhs,
               "r(L_k) = f(L_1..L_k) - f(L_1..L_{k-1})", to_string(lhs),
               to_string(rhs));
    f_prev = f_now;
  }

  bool member = g.size() <= kBaseEnumerationCap
                    ? in_base(g, d, dec.received)
                    : in_base_by_cut(g, d, dec.received);
  report.add("base_membership", member,
             g.size() <= kBaseEnumerationCap ? "exhaustive" : "min-cut");
  return report;
}

Allocation extract_allocation(const Graph& g, const Endowments& d,
                              const LevelDecomposition& dec) {
  const std::size_t levels = dec.level_count();
  Allocation alloc;
  for (std::size_t k = 0; k < levels / 2; ++k) {
    const NodeSet& low = dec.level_sets[k];
    const NodeSet& high = dec.level_sets[levels - 1 - k];
    std::map<NodeId, Rational> low_endow, low_rate, high_endow, high_rate;
    for (NodeId id : low) {
      low_endow[id] = d.at(id);
      low_rate[id] = dec.received.at(id);
    }
    for (NodeId id : high) {
      high_endow[id] = d.at(id);
      high_rate[id] = dec.received.at(id);
    }
    const std::string tag = "levels " + std::to_string(k + 1) + "/" +
                            std::to_string(levels - k);
    merge_transfers(high_endow, low_rate, edges_between(g, high, low), tag,
                    &alloc.transfers);
    merge_transfers(low_endow, high_rate, edges_between(g, low, high), tag,
                    &alloc.transfers);
  }
  if (levels % 2 == 1) {
    const NodeSet& middle = dec.level_sets[levels / 2];
    std::map<NodeId, Rational> endow, rate;
    for (NodeId id : middle) {
      endow[id] = d.at(id);
      rate[id] = dec.received.at(id);
    }
    merge_transfers(endow, rate, edges_between(g, middle, middle),
                    "middle level", &alloc.transfers);
  }
  return alloc;
}

}  // namespace fairshare
