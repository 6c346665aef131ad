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

// Exact lexicographically optimal (max-min fair) sharing ratios.
//
// The solver peels the graph from the outside in. On the current residual
// node set Q it finds the smallest achievable ratio
//
//   lambda* = min over nonempty S of f_Q(S) / D(S)
//
// together with the largest set L attaining it. If lambda* < 1, L gets
// ratio lambda*, its neighborhood H in G_Q gets 1 / lambda*, both leave Q,
// and the procedure repeats on what remains. Once lambda* reaches 1 every
// remaining node has ratio 1.

#ifndef FAIRSHARE_LEXOPT_H_
#define FAIRSHARE_LEXOPT_H_

#include <cstddef>
#include <map>
#include <vector>

#include "fairshare/flow.h"
#include "fairshare/graph.h"
#include "fairshare/polymatroid.h"
#include "fairshare/rational.h"
#include "fairshare/report.h"

namespace fairshare {

struct LevelDecomposition {
  std::vector<Rational> levels;     // strictly increasing
  std::vector<NodeSet> level_sets;  // partition of the node set
  RateVector ratios;                // rho_i
  RateVector received;              // r_i = rho_i * D_i

  std::size_t level_count() const { return levels.size(); }
  // 0-based level index of a node.
  std::size_t level_of(NodeId id) const;

  friend bool operator==(const LevelDecomposition&,
                         const LevelDecomposition&) = default;
};

// Groups nodes by r_i / D_i. Used to analyse arbitrary rate vectors.
LevelDecomposition decomposition_from_rates(const Endowments& d,
                                            const RateVector& received);

struct Allocation {
  // (giver, receiver) -> d_ij > 0; only for edges of the graph.
  TransferMap transfers;

  Rational given(NodeId i) const;
  Rational received(NodeId j) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct MinRatioResult {
  Rational lambda;
  NodeSet set;  // maximal minimizer
  std::size_t iterations = 0;
};

// Dinkelbach iteration on f_R(S) - lambda * D(S). Throws StructuralError
// if the induced subgraph on `restrict` has an isolated node.
MinRatioResult min_ratio(const Graph& g, const Endowments& d,
                         const NodeSet& restrict);

// Requires a connected graph with at least two nodes.
LevelDecomposition peel_solve(const Graph& g, const Endowments& d);

// Exact optimality certificate: the level-prefix equalities
//   r(L_1) = f(L_1),  r(L_k) = f(L_1..L_k) - f(L_1..L_{k-1})
// plus membership of r in the base polytope. Base membership is decided by
// enumeration up to kBaseEnumerationCap nodes and by a cut above that.
CheckReport certify_lexopt(const Graph& g, const Endowments& d,
                           const LevelDecomposition& dec);

// Realizes the received rates with transfers along edges: paired levels
// (L_k, L_{K-k+1}) trade with each other, an odd middle level circulates
// internally. Throws InternalError if a subproblem is infeasible.
Allocation extract_allocation(const Graph& g, const Endowments& d,
                              const LevelDecomposition& dec);

}  // namespace fairshare

#endif  // FAIRSHARE_LEXOPT_H_
