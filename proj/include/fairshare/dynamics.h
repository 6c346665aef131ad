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

// Slotted simulation of the distributed min-ratio sharing policy.
//
// At the start of slot t every node announces rho_i(t) = Rbar_i(t-1) / D~_i,
// where D~_i is the configured endowment estimate (rho = 0 in slot 1). Each
// node then hands its whole draw D_i(t) to the neighbor(s) with the smallest
// announced ratio, all nodes at once. Received averages follow
//
//   Rbar_i(t) = Rbar_i(t-1) + (R_i(t) - Rbar_i(t-1)) / t.
//
// The simulator works in double precision; exact references (r*, D) are
// converted at comparison time.

#ifndef FAIRSHARE_DYNAMICS_H_
#define FAIRSHARE_DYNAMICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fairshare/graph.h"
#include "fairshare/lexopt.h"
#include "fairshare/polymatroid.h"
#include "fairshare/rational.h"

namespace fairshare {

enum class DistributionKind { kConstant, kUniform, kScaledBernoulli, kDiscrete };

// Law of the per-slot draws D_i(t) of one node.
struct DistributionSpec {
  DistributionKind kind = DistributionKind::kConstant;
  Rational mean;
  Rational bound;
  Rational low;          // uniform lower end
  Rational high;         // uniform upper end, or the Bernoulli "on" value
  Rational probability;  // Bernoulli success probability
  std::vector<Rational> values;
  std::vector<Rational> probs;

  static DistributionSpec constant(Rational mean);
  static DistributionSpec uniform(Rational low, Rational high);
  static DistributionSpec scaled_bernoulli(Rational probability, Rational high);
  static DistributionSpec discrete(std::vector<Rational> values,
                                   std::vector<Rational> probs);

  Rational analytic_mean() const;
  Rational support_min() const;
  Rational support_max() const;
  // Declared mean equals the analytic one, support within [0, bound],
  // probabilities valid. Throws InputError.
  void validate() const;
  double sample(std::mt19937_64& rng) const;

  friend bool operator==(const DistributionSpec&,
                         const DistributionSpec&) = default;
};

std::string to_string(DistributionKind kind);

enum class Estimator { kExactMean, kRunningAverage, kDiscounted };
enum class TieBreak { kSplitEqually, kLowestIndex, kUniformRandom };

std::string to_string(Estimator e);
std::string to_string(TieBreak t);
Estimator parse_estimator(const std::string& text);
TieBreak parse_tie_break(const std::string& text);

struct SimConfig {
  std::int64_t horizon = 1;
  Estimator estimator = Estimator::kExactMean;
  double alpha = 0.9;  // discounted estimator weight on the past
  TieBreak tie_break = TieBreak::kSplitEqually;
  std::uint64_t seed = 0;
  // Record slots t with t % record_every == 0, and always the last slot.
  std::int64_t record_every = 1;

  void validate() const;
};

// Per-node vectors follow the graph's node order.
struct SimRecord {
  std::int64_t t = 0;
  std::vector<double> r_bar;
  std::vector<double> rho;
  std::vector<double> estimate;
  std::optional<double> lyapunov;
};

struct SimTrace {
  std::vector<NodeId> nodes;
  std::vector<SimRecord> records;
};

class Simulator {
 public:
  // `reference` (received rates r*) enables Lyapunov values in snapshots.
  Simulator(const Graph& g, const std::map<NodeId, DistributionSpec>& dists,
            const SimConfig& cfg,
            std::optional<RateVector> reference = std::nullopt);

  std::vector<double> sample_draws();

  // Runs one slot with explicit draws (graph node order). Returns what each
  // node received in the slot. Throws InputError on a draw outside
  // [0, bound].
  const std::vector<double>& step(std::span<const double> draws);

  std::int64_t slot() const { return slot_; }
  const std::vector<double>& r_bar() const { return r_bar_; }
  // Ratios to be announced in the next slot.
  const std::vector<double>& rho() const { return rho_; }
  const std::vector<double>& estimate() const { return estimate_; }
  std::optional<double> lyapunov_value() const;
  SimRecord snapshot() const;

 private:
  void distribute(std::size_t giver, double amount);

  Graph graph_;
  SimConfig cfg_;
  std::vector<DistributionSpec> dists_;
  std::vector<double> bounds_;
  std::vector<double> means_;
  std::optional<std::vector<double>> reference_;
  std::mt19937_64 rng_;
  std::int64_t slot_ = 0;
  std::vector<double> r_bar_;
  std::vector<double> rho_;
  std::vector<double> estimate_;
  std::vector<double> draw_sum_;
  std::vector<double> received_;
  std::vector<std::size_t> tied_;
};

// Seeded run of cfg.horizon slots. Identical inputs give identical traces.
SimTrace run(const Graph& g, const std::map<NodeId, DistributionSpec>& dists,
             const SimConfig& cfg,
             std::optional<RateVector> reference = std::nullopt);

// Expected next-slot receipt J_i for announced ratios `rho` under
// split-equally ties: sum over neighbors j that rank i among their
// minimum-ratio neighbors of D_j / (number of such minimizers).
RateVector expected_step(const Graph& g, const Endowments& d,
                         const RateVector& rho);

// V(x) = 1/2 sum_i (x_i - r*_i)^2 / D_i.
Rational lyapunov(const RateVector& r_bar, const RateVector& r_star,
                  const Endowments& d);

struct Checkpoint {
  std::int64_t t = 0;
  double max_ratio_error = 0;  // max_i |rho_i(t) - rho*_i|
  double lyapunov = 0;
};

struct ConvergenceMetrics {
  std::vector<Checkpoint> checkpoints;
  // First recorded slot whose error is within the band (nullopt if never).
  std::map<double, std::optional<std::int64_t>> band_entry;
  double final_error = 0;
  double final_lyapunov = 0;
  // Fraction of consecutive checkpoints where V did not increase.
  double lyapunov_nonincreasing_fraction = 1;
  // Spearman rank correlation between t and V (negative: decreasing).
  double lyapunov_rank_correlation = 0;
};

inline constexpr double kConvergenceBands[] = {0.1, 0.05, 0.01};

ConvergenceMetrics convergence_report(const SimTrace& trace,
                                      const RateVector& r_star,
                                      const Endowments& d);

}  // namespace fairshare

#endif  // FAIRSHARE_DYNAMICS_H_
