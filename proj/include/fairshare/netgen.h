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

// Seeded random network families and endowment profiles. Node ids are
// 1..n in every model.

#ifndef FAIRSHARE_NETGEN_H_
#define FAIRSHARE_NETGEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fairshare/graph.h"
#include "fairshare/polymatroid.h"
#include "fairshare/rational.h"

namespace fairshare {

enum class ModelKind { kLattice, kErdosRenyi, kBarabasiAlbert, kWattsStrogatz };

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);

struct ModelSpec {
  ModelKind kind = ModelKind::kLattice;
  int rows = 0;      // lattice
  int cols = 0;      // lattice
  int n = 0;         // er, ba, ws
  double p = 0;      // er edge probability
  int m = 1;         // ba links per new node
  double power = 1;  // ba attachment weight degree^power
  int k = 2;         // ws ring degree (even)
  double beta = 0;   // ws rewiring probability

  static ModelSpec lattice(int rows, int cols);
  static ModelSpec erdos_renyi(int n, double p);
  static ModelSpec barabasi_albert(int n, int m, double power);
  static ModelSpec watts_strogatz(int n, int k, double beta);

  int node_count() const;
  void validate() const;
};

enum class Placement { kSeededRandom, kListed };

struct EndowmentSpec {
  bool hotspots = false;
  Rational base{30};
  int hot_count = 0;
  Rational hot{300};
  Placement placement = Placement::kSeededRandom;
  std::vector<NodeId> listed;

  static EndowmentSpec homogeneous(Rational d);
  static EndowmentSpec hotspot_random(Rational base, int count, Rational hot);
  static EndowmentSpec hotspot_listed(Rational base, std::vector<NodeId> ids,
                                      Rational hot);
  void validate(int n) const;
};

struct GenSpec {
  ModelSpec model;
  EndowmentSpec endowment;
  std::uint64_t seed = 0;
  bool require_connected = true;
  int max_attempts = 1000;
};

struct Network {
  Graph graph;
  Endowments endowments;
  int attempts = 1;
};

// Deterministic in the spec. With require_connected, random models are
// resampled from the same stream until connected; GenerationError after
// max_attempts.
Network generate(const GenSpec& spec);

// Endowments for an existing graph.
Endowments make_profile(const Graph& g, const EndowmentSpec& spec,
                        std::uint64_t seed);

}  // namespace fairshare

#endif  // FAIRSHARE_NETGEN_H_
