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

// The neighborhood-endowment set function f(S) = sum of D_j over j in N_S
// and the polytopes it defines:
//
//   A   = { r >= 0 : r(S) <= f(S) for all S }
//   A_0 = { r in A : r(N) = f(N) }
//
// A_0 is exactly the set of long-run received-rate vectors achievable when
// every node eventually hands out all it generates.

#ifndef FAIRSHARE_POLYMATROID_H_
#define FAIRSHARE_POLYMATROID_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fairshare/graph.h"
#include "fairshare/rational.h"

namespace fairshare {

using RateVector = std::map<NodeId, Rational>;

struct Endowments {
  // Mean resource generated per slot, D_i > 0.
  std::map<NodeId, Rational> means;
  // Upper bound on any single-slot draw.
  Rational bound;

  const Rational& at(NodeId id) const;
  Rational total(const NodeSet& s) const;

  friend bool operator==(const Endowments&, const Endowments&) = default;
};

// Bound defaults to the largest mean.
Endowments make_endowments(std::map<NodeId, Rational> means);
Endowments make_endowments(std::map<NodeId, Rational> means, Rational bound);

// Every node of g has a positive mean, no extra ids, bound >= max mean.
void validate_endowments(const Graph& g, const Endowments& d);

Rational f_value(const Graph& g, const Endowments& d, const NodeSet& s);

struct SubmodularityReport {
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  std::vector<std::pair<NodeSet, NodeSet>> violations;
  bool ok() const { return violations.empty(); }
};

// Checks f(S n T) + f(S u T) <= f(S) + f(T) on `trials` random pairs, and
// on every pair when the graph has at most kSubmodularExhaustiveCap nodes.
inline constexpr std::size_t kSubmodularExhaustiveCap = 10;
SubmodularityReport check_submodular(const Graph& g, const Endowments& d,
                                     std::size_t trials, std::uint64_t seed);

// Membership in A_0 by enumerating every proper subset. Throws
// CapacityError above kBaseEnumerationCap nodes; use in_base_by_cut there.
inline constexpr std::size_t kBaseEnumerationCap = 24;
bool in_base(const Graph& g, const Endowments& d, const RateVector& r);

// Same question answered with one minimum cut: r is in A_0 iff r >= 0,
// r(N) = f(N) and min over S of f(S) - r(S) is zero.
bool in_base_by_cut(const Graph& g, const Endowments& d, const RateVector& r);

// Greedy vertex of A_0 for the given node order: each node receives the
// endowments of the neighbors not already claimed by earlier nodes.
RateVector extreme_point(const Graph& g, const Endowments& d,
                         const std::vector<NodeId>& order);

}  // namespace fairshare

#endif  // FAIRSHARE_POLYMATROID_H_
