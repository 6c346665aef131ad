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

// Cut-based reductions on top of the max-flow kernel.

#ifndef FAIRSHARE_FLOW_H_
#define FAIRSHARE_FLOW_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fairshare/flow_network.h"
#include "fairshare/graph.h"
#include "fairshare/polymatroid.h"
#include "fairshare/rational.h"

namespace fairshare {

using TransferMap = std::map<std::pair<NodeId, NodeId>, Rational>;

struct DeficiencyResult {
  Rational value;
  NodeSet set;
};

// min over S subset of `restrict` of f_R(S) - w(S), where f_R is f on the
// induced subgraph G_R. Solved as a maximum-weight closure: node i is a
// "project" worth w_i that requires every neighbor j (cost D_j). The
// returned set is the union of all minimizers, possibly empty (value 0).
DeficiencyResult min_weighted_deficiency(const Graph& g, const Endowments& d,
                                         const RateVector& weights,
                                         const NodeSet& restrict);

// min over nonempty S subset of `restrict` of f_R(S) - lambda * D(S).
// Returns the maximal minimizer. When only the empty set attains the
// minimum, falls back to the best singleton so the result is nonempty.
DeficiencyResult min_deficiency_set(const Graph& g, const Endowments& d,
                                    const Rational& lambda,
                                    const NodeSet& restrict);

// Finds d_uv >= 0 on the allowed (supplier, receiver) pairs with row sums
// equal to `supplies` and column sums equal to `demands`. A node may appear
// on both sides. Zero-amount entries are omitted from the result.
// Throws InputError if the totals differ.
std::optional<TransferMap> transportation(
    const std::map<NodeId, Rational>& supplies,
    const std::map<NodeId, Rational>& demands,
    const std::vector<std::pair<NodeId, NodeId>>& allowed);

}  // namespace fairshare

#endif  // FAIRSHARE_FLOW_H_
