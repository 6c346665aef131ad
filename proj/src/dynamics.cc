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

#include "fairshare/dynamics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fairshare/errors.h"

namespace fairshare {
namespace {

// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    double mean = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) out[order[k]] = mean;
    i = j + 1;
  }
  return out;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2) return 0;
  std::vector<double> ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double cov = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va == 0 || vb == 0) return 0;
  return cov / std::sqrt(va * vb);
}

}  // namespace

DistributionSpec DistributionSpec::constant(Rational mean) {
  DistributionSpec s;
  s.kind = DistributionKind::kConstant;
  s.mean = mean;
  s.bound = mean;
  s.low = mean;
  s.high = mean;
  return s;
}

DistributionSpec DistributionSpec::uniform(Rational low, Rational high) {
  DistributionSpec s;
  s.kind = DistributionKind::kUniform;
  s.low = low;
  s.high = high;
  s.mean = (low + high) / 2;
  s.bound = high;
  return s;
}

DistributionSpec DistributionSpec::scaled_bernoulli(Rational probability,
                                                    Rational high) {
  DistributionSpec s;
  s.kind = DistributionKind::kScaledBernoulli;
  s.probability = probability;
  s.high = high;
  s.mean = probability * high;
  s.bound = high;
  return s;
}

DistributionSpec DistributionSpec::discrete(std::vector<Rational> values,
                                            std::vector<Rational> probs) {
  DistributionSpec s;
  s.kind = DistributionKind::kDiscrete;
  s.values = std::move(values);
  s.probs = std::move(probs);
  s.mean = 0;
  for (std::size_t i = 0; i < s.values.size() && i < s.probs.size(); ++i) {
    s.mean += s.values[i] * s.probs[i];
  }
  s.bound = s.values.empty()
                ? Rational(0)
                : *std::max_element(s.values.begin(), s.values.end());
  return s;
}

Rational DistributionSpec::analytic_mean() const {
  switch (kind) {
    case DistributionKind::kConstant:
      return low;
    case DistributionKind::kUniform:
      return (low + high) / 2;
    case DistributionKind::kScaledBernoulli:
      return probability * high;
    case DistributionKind::kDiscrete: {
      Rational m(0);
      for (std::size_t i = 0; i < values.size() && i < probs.size(); ++i) {
        m += values[i] * probs[i];
      }
      return m;
    }
  }
  throw InternalError("unknown distribution kind");
}

Rational DistributionSpec::support_min() const {
  switch (kind) {
    case DistributionKind::kConstant:
    case DistributionKind::kUniform:
      return low;
    case DistributionKind::kScaledBernoulli:
      return probability == 1 ? high : Rational(0);
    case DistributionKind::kDiscrete:
      return values.empty() ? Rational(0)
                            : *std::min_element(values.begin(), values.end());
  }
  throw InternalError("unknown distribution kind");
}

Rational DistributionSpec::support_max() const {
  switch (kind) {
    case DistributionKind::kConstant:
    case DistributionKind::kUniform:
      return high;
    case DistributionKind::kScaledBernoulli:
      return probability == 0 ? Rational(0) : high;
    case DistributionKind::kDiscrete:
      return values.empty() ? Rational(0)
                            : *std::max_element(values.begin(), values.end());
  }
  throw InternalError("unknown distribution kind");
}

void DistributionSpec::validate() const {
  switch (kind) {
    case DistributionKind::kConstant:
      if (low != high) throw InputError("constant distribution with a range");
      break;
    case DistributionKind::kUniform:
      if (low > high) throw InputError("uniform distribution with low > high");
      break;
    case DistributionKind::kScaledBernoulli:
      if (probability < 0 || probability > 1) {
        throw InputError("bernoulli probability outside [0, 1]");
      }
      break;
    case DistributionKind::kDiscrete: {
      if (values.empty() || values.size() != probs.size()) {
        throw InputError("discrete distribution needs matching values/probs");
      }
      Rational total(0);
      for (const Rational& p : probs) {
        if (p < 0) throw InputError("negative discrete probability");
        total += p;
      }
      if (total != 1) {
        throw InputError("discrete probabilities sum to " + to_string(total));
      }
      break;
    }
  }
  if (support_min() < 0) throw InputError("negative draws in the support");
  if (support_max() > bound) {
    throw InputError("support exceeds the bound " + to_string(bound));
  }
  if (mean != analytic_mean()) {
    throw InputError("declared mean " + to_string(mean) +
                     " differs from the analytic mean " +
                     to_string(analytic_mean()));
  }
  if (mean <= 0) throw InputError("distribution mean must be positive");
}

double DistributionSpec::sample(std::mt19937_64& rng) const {
  switch (kind) {
    case DistributionKind::kConstant:
      return to_double(low);
    case DistributionKind::kUniform: {
      std::uniform_real_distribution<double> u(to_double(low),
                                               to_double(high));
      return u(rng);
    }
    case DistributionKind::kScaledBernoulli: {
      std::bernoulli_distribution coin(to_double(probability));
      return coin(rng) ? to_double(high) : 0.0;
    }
    case DistributionKind::kDiscrete: {
      std::vector<double> weights;
      for (const Rational& p : probs) weights.push_back(to_double(p));
      std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                   weights.end());
      return to_double(values[pick(rng)]);
    }
  }
  throw InternalError("unknown distribution kind");
}

std::string to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kConstant:
      return "constant";
    case DistributionKind::kUniform:
      return "uniform";
    case DistributionKind::kScaledBernoulli:
      return "bernoulli";
    case DistributionKind::kDiscrete:
      return "discrete";
  }
  return "unknown";
}

std::string to_string(Estimator e) {
  switch (e) {
    case Estimator::kExactMean:
      return "exact";
    case Estimator::kRunningAverage:
      return "running";
    case Estimator::kDiscounted:
      return "discounted";
  }
  return "unknown";
}

std::string to_string(TieBreak t) {
  switch (t) {
    case TieBreak::kSplitEqually:
      return "split";
    case TieBreak::kLowestIndex:
      return "lowest";
    case TieBreak::kUniformRandom:
      return "random";
  }
  return "unknown";
}

Estimator parse_estimator(const std::string& text) {
  if (text == "exact") return Estimator::kExactMean;
  if (text == "running") return Estimator::kRunningAverage;
  if (text == "discounted") return Estimator::kDiscounted;
  throw InputError("unknown estimator '" + text + "'");
}

TieBreak parse_tie_break(const std::string& text) {
  if (text == "split") return TieBreak::kSplitEqually;
  if (text == "lowest") return TieBreak::kLowestIndex;
  if (text == "random") return TieBreak::kUniformRandom;
  throw InputError("unknown tie-break '" + text + "'");
}

void SimConfig::validate() const {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  if (record_every < 1) throw InputError("record_every must be at least 1");
  if (estimator == Estimator::kDiscounted && !(alpha > 0 && alpha < 1)) {
    throw InputError("discount alpha must lie strictly inside (0, 1)");
  }
}

Simulator::Simulator(const Graph& g,
                     const std::map<NodeId, DistributionSpec>& dists,
                     const SimConfig& cfg, std::optional<RateVector> reference)
    : graph_(g), cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
  const std::size_t n = graph_.size();
  for (NodeId id : graph_.nodes()) {
    auto it = dists.find(id);
    if (it == dists.end()) {
      throw InputError("no distribution for node " + std::to_string(id));
    }
    it->second.validate();
    dists_.push_back(it->second);
    bounds_.push_back(to_double(it->second.bound));
    means_.push_back(to_double(it->second.mean));
  }
  if (reference) {
    std::vector<double> ref;
    for (NodeId id : graph_.nodes()) {
      auto it = reference->find(id);
      if (it == reference->end()) {
        throw InputError("reference has no rate for node " +
                         std::to_string(id));
      }
      ref.push_back(to_double(it->second));
    }
    reference_ = std::move(ref);
  }
  r_bar_.assign(n, 0.0);
  rho_.assign(n, 0.0);
  estimate_.assign(n, 0.0);
  draw_sum_.assign(n, 0.0);
  received_.assign(n, 0.0);
}

std::vector<double> Simulator::sample_draws() {
  std::vector<double> out;
  out.reserve(dists_.size());
  for (const DistributionSpec& s : dists_) out.push_back(s.sample(rng_));
  return out;
}

void Simulator::distribute(std::size_t giver, double amount) {
  const std::vector<std::size_t>& hood = graph_.adjacent_indices(giver);
  if (hood.empty() || amount == 0) return;
  double lowest = rho_[hood.front()];
  for (std::size_t j : hood) lowest = std::min(lowest, rho_[j]);
  tied_.clear();
  for (std::size_t j : hood) {
    if (rho_[j] == lowest) tied_.push_back(j);
  }
  switch (cfg_.tie_break) {
    case TieBreak::kSplitEqually: {
      const double share = amount / static_cast<double>(tied_.size());
      for (std::size_t j : tied_) received_[j] += share;
      break;
    }
    case TieBreak::kLowestIndex:
      received_[tied_.front()] += amount;
      break;
    case TieBreak::kUniformRandom: {
      std::uniform_int_distribution<std::size_t> pick(0, tied_.size() - 1);
      received_[tied_[pick(rng_)]] += amount;
      break;
    }
  }
}

const std::vector<double>& Simulator::step(std::span<const double> draws) {
  const std::size_t n = graph_.size();
  if (draws.size() != n) {
    throw InputError("expected " + std::to_string(n) + " draws, got " +
                     std::to_string(draws.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(draws[i] >= 0) || draws[i] > bounds_[i]) {
      throw InputError("draw " + std::to_string(draws[i]) + " of node " +
                       std::to_string(graph_.id_at(i)) +
                       " is outside [0, bound]");
    }
  }

  std::fill(received_.begin(), received_.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) distribute(i, draws[i]);

  ++slot_;
  const double t = static_cast<double>(slot_);
  for (std::size_t i = 0; i < n; ++i) {
    r_bar_[i] += (received_[i] - r_bar_[i]) / t;
    draw_sum_[i] += draws[i];
    switch (cfg_.estimator) {
      case Estimator::kExactMean:
        estimate_[i] = means_[i];
        break;
      case Estimator::kRunningAverage:
        estimate_[i] = draw_sum_[i] / t;
        break;
      case Estimator::kDiscounted:
        estimate_[i] = slot_ == 1 ? draws[i]
                                  : (1 - cfg_.alpha) * draws[i] +
                                        cfg_.alpha * estimate_[i];
        break;
    }
    rho_[i] = estimate_[i] > 0 ? r_bar_[i] / estimate_[i] : 0.0;
  }
  return received_;
}

std::optional<double> Simulator::lyapunov_value() const {
  if (!reference_) return std::nullopt;
  double v = 0;
  for (std::size_t i = 0; i < r_bar_.size(); ++i) {
    double diff = r_bar_[i] - (*reference_)[i];
    v += diff * diff / means_[i];
  }
  return v / 2;
}

SimRecord Simulator::snapshot() const {
  return SimRecord{slot_, r_bar_, rho_, estimate_, lyapunov_value()};
}

SimTrace run(const Graph& g, const std::map<NodeId, DistributionSpec>& dists,
             const SimConfig& cfg, std::optional<RateVector> reference) {
  Simulator sim(g, dists, cfg, std::move(reference));
  SimTrace trace;
  trace.nodes = g.nodes();
  for (std::int64_t t = 1; t <= cfg.horizon; ++t) {
    std::vector<double> draws = sim.sample_draws();
    sim.step(draws);
    if (t % cfg.record_every == 0 || t == cfg.horizon) {
      trace.records.push_back(sim.snapshot());
    }
  }
  return trace;
}

RateVector expected_step(const Graph& g, const Endowments& d,
                         const RateVector& rho) {
  RateVector out;
  for (NodeId id : g.nodes()) out[id] = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::vector<std::size_t>& hood = g.adjacent_indices(j);
    if (hood.empty()) continue;
    const Rational* lowest = nullptr;
    for (std::size_t i : hood) {
      const Rational& r = rho.at(g.id_at(i));
      if (!lowest || r < *lowest) lowest = &r;
    }
    std::vector<NodeId> tied;
    for (std::size_t i : hood) {
      if (rho.at(g.id_at(i)) == *lowest) tied.push_back(g.id_at(i));
    }
    Rational share = d.at(g.id_at(j)) / static_cast<long>(tied.size());
    for (NodeId i : tied) out[i] += share;
  }
  return out;
}

Rational lyapunov(const RateVector& r_bar, const RateVector& r_star,
                  const Endowments& d) {
  if (r_bar.size() != r_star.size()) {
    throw InputError("lyapunov: rate vectors over different node sets");
  }
  Rational v(0);
  for (const auto& [id, x] : r_bar) {
    auto it = r_star.find(id);
    if (it == r_star.end()) {
      throw InputError("lyapunov: node " + std::to_string(id) +
                       " missing from the reference");
    }
    Rational diff = x - it->second;
    v += diff * diff / d.at(id);
  }
  return v / 2;
}

ConvergenceMetrics convergence_report(const SimTrace& trace,
                                      const RateVector& r_star,
                                      const Endowments& d) {
  const std::size_t n = trace.nodes.size();
  std::vector<double> ref(n), target(n), mean(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId id = trace.nodes[i];
    auto it = r_star.find(id);
    if (it == r_star.end()) {
      throw InputError("reference has no rate for node " + std::to_string(id));
    }
    ref[i] = to_double(it->second);
    target[i] = to_double(it->second / d.at(id));
    mean[i] = to_double(d.at(id));
  }

  ConvergenceMetrics m;
  for (double band : kConvergenceBands) m.band_entry[band] = std::nullopt;
  std::vector<double> times, values;
  for (const SimRecord& rec : trace.records) {
    if (rec.rho.size() != n || rec.r_bar.size() != n) {
      throw InputError("trace record at t=" + std::to_string(rec.t) +
                       " has the wrong width");
    }
    Checkpoint cp;
    cp.t = rec.t;
    for (std::size_t i = 0; i < n; ++i) {
      cp.max_ratio_error =
          std::max(cp.max_ratio_error, std::abs(rec.rho[i] - target[i]));
      double diff = rec.r_bar[i] - ref[i];
      cp.lyapunov += diff * diff / mean[i];
    }
    cp.lyapunov /= 2;
    for (auto& [band, entry] : m.band_entry) {
      if (!entry && cp.max_ratio_error <= band) entry = cp.t;
    }
    times.push_back(static_cast<double>(cp.t));
    values.push_back(cp.lyapunov);
    m.checkpoints.push_back(cp);
  }
  if (!m.checkpoints.empty()) {
    m.final_error = m.checkpoints.back().max_ratio_error;
    m.final_lyapunov = m.checkpoints.back().lyapunov;
  }
  if (values.size() >= 2) {
    std::size_t steady = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] <= values[k - 1]) ++steady;
    }
    m.lyapunov_nonincreasing_fraction =
        static_cast<double>(steady) / static_cast<double>(values.size() - 1);
  }
  m.lyapunov_rank_correlation = spearman(times, values);
  return m;
}

}  // namespace fairshare
