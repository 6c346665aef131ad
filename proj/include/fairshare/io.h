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

// File formats. Rationals are written as "p" or "p/q" strings; floats that
// accompany them are rounded to kFloatDigits significant digits.
//
// Graph JSON:
//   {"nodes": [{"id": 1, "d_mean": "30", "dist": {"kind": "constant"}}, ...],
//    "edges": [[1, 2], ...], "bound": "60", "meta": {"seed": 7, ...}}
// with dist kinds constant, uniform {low, high}, bernoulli {p, high} and
// discrete {values, probs}. "bound" and "dist" are optional.
//
// Trace CSV: header t,node,r_bar,rho,estimate,V (V empty without a
// reference), one row per node per recorded slot.

#ifndef FAIRSHARE_IO_H_
#define FAIRSHARE_IO_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "fairshare/dynamics.h"
#include "fairshare/graph.h"
#include "fairshare/lexopt.h"
#include "fairshare/polymatroid.h"
#include "fairshare/report.h"
#include "fairshare/verify.h"

namespace fairshare {

using Json = nlohmann::ordered_json;

inline constexpr int kFloatDigits = 12;

struct NetworkDocument {
  Graph graph;
  Endowments endowments;
  std::map<NodeId, DistributionSpec> dists;
  Json meta = Json::object();

  std::optional<std::uint64_t> seed() const;

  friend bool operator==(const NetworkDocument&,
                         const NetworkDocument&) = default;
};

// Constant distributions at the endowment means.
NetworkDocument make_network_document(Graph g, Endowments d,
                                      Json meta = Json::object());

Json network_to_json(const NetworkDocument& doc);
NetworkDocument network_from_json(const Json& j);

// FNV-1a over the canonical node, edge and endowment listing, as 16 hex
// digits.
std::string network_hash(const Graph& g, const Endowments& d);

struct SolutionDocument {
  NetworkDocument network;
  LevelDecomposition decomposition;
  Allocation allocation;
  std::optional<CheckReport> certification;

  friend bool operator==(const SolutionDocument&,
                         const SolutionDocument&) = default;
};

Json solution_to_json(const SolutionDocument& doc);
// Rejects documents whose stored hash does not match the embedded network.
SolutionDocument solution_from_json(const Json& j);

Json report_to_json(const CheckReport& report);
CheckReport report_from_json(const Json& j);
Json stability_to_json(const StabilityReport& report);
Json metrics_to_json(const ConvergenceMetrics& m);

// Whitespace-separated columns t, max_ratio_error, lyapunov.
void write_gnuplot_data(std::ostream& out, const ConvergenceMetrics& m);

void write_trace_csv(std::ostream& out, const SimTrace& trace);
// Throws ParseError naming the offending line.
SimTrace read_trace_csv(std::istream& in);

// File helpers. Parse failures carry the file name in their context.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fairshare

#endif  // FAIRSHARE_IO_H_
