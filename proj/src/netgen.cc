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

#include "fairshare/netgen.h"

#include <cmath>
#include <random>
#include <set>

#include "fairshare/errors.h"

namespace fairshare {
namespace {

using Rng = std::mt19937_64;

Graph make_graph(int n, const std::set<Edge>& edges) {
  std::vector<NodeId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(i);
  return Graph(std::move(ids), {edges.begin(), edges.end()});
}

Edge canonical(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph lattice(int rows, int cols) {
  std::set<Edge> edges;
  auto id = [cols](int r, int c) { return NodeId{r} * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.insert({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.insert({id(r, c), id(r + 1, c)});
    }
  }
  return make_graph(rows * cols, edges);
}

Graph erdos_renyi(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::set<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (coin(rng)) edges.insert({i, j});
    }
  }
  return make_graph(n, edges);
}

Graph barabasi_albert(int n, int m, double power, Rng& rng) {
  std::set<Edge> edges;
  std::vector<int> degree(n + 1, 0);
  for (NodeId i = 1; i <= m + 1; ++i) {
    for (NodeId j = i + 1; j <= m + 1; ++j) {
      edges.insert({i, j});
      ++degree[i];
      ++degree[j];
    }
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (NodeId v = m + 2; v <= n; ++v) {
    std::vector<NodeId> pool;
    std::vector<double> weight;
    for (NodeId u = 1; u < v; ++u) {
      pool.push_back(u);
      weight.push_back(std::pow(static_cast<double>(degree[u]), power));
    }
    for (int link = 0; link < m; ++link) {
      double total = 0;
      for (double w : weight) total += w;
      double x = unit(rng) * total;
      std::size_t pick = 0;
      while (pick + 1 < pool.size() && (x -= weight[pick]) >= 0) ++pick;
      edges.insert({pool[pick], v});
      ++degree[pool[pick]];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      weight.erase(weight.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    degree[v] = m;
  }
  return make_graph(n, edges);
}

Graph watts_strogatz(int n, int k, double beta, Rng& rng) {
  std::set<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      edges.insert(canonical(i, (i - 1 + j) % n + 1));
    }
  }
  std::bernoulli_distribution rewire(beta);
  std::uniform_int_distribution<NodeId> any(1, n);
  for (int j = 1; j <= k / 2; ++j) {
    for (NodeId i = 1; i <= n; ++i) {
      Edge old = canonical(i, (i - 1 + j) % n + 1);
      if (!rewire(rng) || !edges.count(old)) continue;
      std::size_t degree = 0;
      for (const Edge& e : edges) degree += e.first == i || e.second == i;
      if (degree >= static_cast<std::size_t>(n - 1)) continue;
      NodeId target;
      do {
        target = any(rng);
      } while (target == i || edges.count(canonical(i, target)));
      edges.erase(old);
      edges.insert(canonical(i, target));
    }
  }
  return make_graph(n, edges);
}

Graph sample_graph(const ModelSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case ModelKind::kLattice:
      return lattice(spec.rows, spec.cols);
    case ModelKind::kErdosRenyi:
      return erdos_renyi(spec.n, spec.p, rng);
    case ModelKind::kBarabasiAlbert:
      return barabasi_albert(spec.n, spec.m, spec.power, rng);
    case ModelKind::kWattsStrogatz:
      return watts_strogatz(spec.n, spec.k, spec.beta, rng);
  }
  throw InternalError("unknown model kind");
}

Endowments profile(const Graph& g, const EndowmentSpec& spec, Rng& rng) {
  spec.validate(static_cast<int>(g.size()));
  std::map<NodeId, Rational> means;
  for (NodeId id : g.nodes()) means[id] = spec.base;
  if (spec.hotspots) {
    NodeSet hot;
    if (spec.placement == Placement::kListed) {
      g.validate_subset(make_node_set(spec.listed));
      hot = spec.listed;
    } else {
      std::vector<NodeId> ids = g.nodes();
      for (int k = 0; k < spec.hot_count; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, ids.size() - 1);
        std::swap(ids[k], ids[pick(rng)]);
        hot.push_back(ids[k]);
      }
    }
    for (NodeId id : hot) means[id] = spec.hot;
  }
  return make_endowments(std::move(means));
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kLattice:
      return "lattice";
    case ModelKind::kErdosRenyi:
      return "er";
    case ModelKind::kBarabasiAlbert:
      return "ba";
    case ModelKind::kWattsStrogatz:
      return "ws";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& text) {
  if (text == "lattice") return ModelKind::kLattice;
  if (text == "er") return ModelKind::kErdosRenyi;
  if (text == "ba") return ModelKind::kBarabasiAlbert;
  if (text == "ws") return ModelKind::kWattsStrogatz;
  throw InputError("unknown model '" + text + "'");
}

ModelSpec ModelSpec::lattice(int rows, int cols) {
  ModelSpec s;
  s.kind = ModelKind::kLattice;
  s.rows = rows;
  s.cols = cols;
  return s;
}

ModelSpec ModelSpec::erdos_renyi(int n, double p) {
  ModelSpec s;
  s.kind = ModelKind::kErdosRenyi;
  s.n = n;
  s.p = p;
  return s;
}

ModelSpec ModelSpec::barabasi_albert(int n, int m, double power) {
  ModelSpec s;
  s.kind = ModelKind::kBarabasiAlbert;
  s.n = n;
  s.m = m;
  s.power = power;
  return s;
}

ModelSpec ModelSpec::watts_strogatz(int n, int k, double beta) {
  ModelSpec s;
  s.kind = ModelKind::kWattsStrogatz;
  s.n = n;
  s.k = k;
  s.beta = beta;
  return s;
}

int ModelSpec::node_count() const {
  return kind == ModelKind::kLattice ? rows * cols : n;
}

void ModelSpec::validate() const {
  switch (kind) {
    case ModelKind::kLattice:
      if (rows < 1 || cols < 1) throw InputError("lattice needs rows, cols >= 1");
      break;
    case ModelKind::kErdosRenyi:
      if (!(p > 0 && p <= 1)) throw InputError("er needs p in (0, 1]");
      break;
    case ModelKind::kBarabasiAlbert:
      if (m < 1 || m + 1 > n) throw InputError("ba needs 1 <= m < n");
      if (!std::isfinite(power)) throw InputError("ba power must be finite");
      break;
    case ModelKind::kWattsStrogatz:
      if (k < 2 || k % 2 || k >= n) {
        throw InputError("ws needs an even k with 2 <= k < n");
      }
      if (!(beta >= 0 && beta <= 1)) throw InputError("ws needs beta in [0, 1]");
      break;
  }
  if (node_count() < 2) throw InputError("a network needs at least 2 nodes");
}

EndowmentSpec EndowmentSpec::homogeneous(Rational d) {
  EndowmentSpec s;
  s.base = d;
  return s;
}

EndowmentSpec EndowmentSpec::hotspot_random(Rational base, int count,
                                            Rational hot) {
  EndowmentSpec s;
  s.hotspots = true;
  s.base = base;
  s.hot_count = count;
  s.hot = hot;
  return s;
}

EndowmentSpec EndowmentSpec::hotspot_listed(Rational base,
                                            std::vector<NodeId> ids,
                                            Rational hot) {
  EndowmentSpec s;
  s.hotspots = true;
  s.base = base;
  s.hot_count = static_cast<int>(ids.size());
  s.hot = hot;
  s.placement = Placement::kListed;
  s.listed = std::move(ids);
  return s;
}

void EndowmentSpec::validate(int n) const {
  if (base <= 0) throw InputError("endowments must be positive");
  if (!hotspots) return;
  if (hot <= 0) throw InputError("hotspot endowment must be positive");
  if (hot_count < 0 || hot_count > n) {
    throw InputError("hotspot count must lie in [0, " + std::to_string(n) +
                     "]");
  }
  if (placement == Placement::kListed) {
    if (make_node_set(listed).size() != listed.size()) {
      throw InputError("duplicate hotspot ids");
    }
    if (static_cast<int>(listed.size()) != hot_count) {
      throw InputError("hotspot count does not match the listed ids");
    }
  }
}

Network generate(const GenSpec& spec) {
  spec.model.validate();
  spec.endowment.validate(spec.model.node_count());
  if (spec.max_attempts < 1) throw InputError("max_attempts must be >= 1");
  Rng rng(spec.seed);
  Network out;
  for (out.attempts = 1;; ++out.attempts) {
    out.graph = sample_graph(spec.model, rng);
    if (!spec.require_connected || is_connected(out.graph)) break;
    if (out.attempts >= spec.max_attempts) {
      throw GenerationError("no connected " + to_string(spec.model.kind) +
                            " sample in " + std::to_string(spec.max_attempts) +
                            " attempts");
    }
  }
  out.endowments = profile(out.graph, spec.endowment, rng);
  return out;
}

Endowments make_profile(const Graph& g, const EndowmentSpec& spec,
                        std::uint64_t seed) {
  Rng rng(seed);
  return profile(g, spec, rng);
}

}  // namespace fairshare
