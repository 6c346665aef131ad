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

// Verifiers that are independent of how a decomposition was produced.

#ifndef FAIRSHARE_VERIFY_H_
#define FAIRSHARE_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "fairshare/graph.h"
#include "fairshare/lexopt.h"
#include "fairshare/polymatroid.h"
#include "fairshare/report.h"

namespace fairshare {

// Level structure of a lex-optimal vector. With Q_1 = N and
// Q_k = N minus the k-1 outermost level pairs, for k <= floor(K/2):
//   L_k is independent in G_{Q_k};  L_{K-k+1} = N_{Q_k}(L_k);
//   v_k * v_{K-k+1} = 1;  r(L_k) = D(L_{K-k+1});
// the middle value is 1 when K is odd, and v_1 < 1 < v_K when K > 1
// (v_1 = 1 when K = 1).
CheckReport check_structure(const Graph& g, const Endowments& d,
                            const LevelDecomposition& dec);

// Stationary sharing-equilibrium conditions for an allocation: every node
// gives away exactly D_i, receives D_i * rho_i, and gives only to
// neighbors of minimum ratio.
CheckReport check_sharing_equilibrium(const Graph& g, const Endowments& d,
                                      const Allocation& alloc,
                                      const LevelDecomposition& dec);

enum class StabilityMode { kExhaustive, kSampled };

std::string to_string(StabilityMode mode);
StabilityMode parse_stability_mode(const std::string& text);

struct BlockingWitness {
  NodeSet coalition;
  RateVector improving_rates;
};

struct StabilityReport {
  std::size_t checked_coalitions = 0;
  std::optional<BlockingWitness> blocking;
  StabilityMode mode = StabilityMode::kExhaustive;
  // Sampled mode never proves stability; it only fails to find a block.
  bool ok() const { return !blocking.has_value(); }
};

inline constexpr std::size_t kExhaustiveCoalitionCap = 16;

// Decides whether coalition S can, trading only inside G_S and giving at
// most D_i per node, give every member at least reference_i and some member
// strictly more. Returns the improving rates when it can.
std::optional<RateVector> coalition_improvement(const Graph& g,
                                                const Endowments& d,
                                                const RateVector& reference,
                                                const NodeSet& coalition);

// Exhaustive mode tests all 2^N - 1 coalitions (CapacityError above
// kExhaustiveCoalitionCap nodes); sampled mode tests `budget` uniformly
// random nonempty coalitions. Stops at the first blocking coalition.
StabilityReport find_blocking_coalition(const Graph& g, const Endowments& d,
                                        const RateVector& reference,
                                        StabilityMode mode, std::size_t budget,
                                        std::uint64_t seed);
StabilityReport find_blocking_coalition(const Graph& g, const Endowments& d,
                                        const LevelDecomposition& dec,
                                        StabilityMode mode, std::size_t budget,
                                        std::uint64_t seed);

}  // namespace fairshare

#endif  // FAIRSHARE_VERIFY_H_
