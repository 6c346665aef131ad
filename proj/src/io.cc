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

#include "fairshare/io.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fairshare/errors.h"

namespace fairshare {
namespace {

constexpr char kTraceHeader[] = "t,node,r_bar,rho,estimate,V";

std::string field(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string field(const std::string& base, std::size_t index) {
  return base + "[" + std::to_string(index) + "]";
}

const Json& require(const Json& j, const std::string& key,
                    const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(field(ctx, key), "missing field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx, "expected an array");
  return j;
}

Rational rational_field(const Json& j, const std::string& ctx) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
  } catch (const InputError& e) {
    throw ParseError(ctx, e.what());
  }
  throw ParseError(ctx, "expected a rational string such as \"3/4\"");
}

NodeId id_field(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx, "expected an integer id");
  return j.get<NodeId>();
}

std::string render(double x, int digits = 17) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double parse_double(const std::string& text, const std::string& ctx) {
  if (text.empty()) throw ParseError(ctx, "empty number");
  char* end = nullptr;
  errno = 0;
  double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE) {
    throw ParseError(ctx, "bad number '" + text + "'");
  }
  return x;
}

std::int64_t parse_int(const std::string& text, const std::string& ctx) {
  if (text.empty()) throw ParseError(ctx, "empty integer");
  char* end = nullptr;
  errno = 0;
  long long x = std::strtoll(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || errno == ERANGE) {
    throw ParseError(ctx, "bad integer '" + text + "'");
  }
  return x;
}

Json dist_to_json(const DistributionSpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case DistributionKind::kConstant:
      break;
    case DistributionKind::kUniform:
      j["low"] = to_string(s.low);
      j["high"] = to_string(s.high);
      break;
    case DistributionKind::kScaledBernoulli:
      j["p"] = to_string(s.probability);
      j["high"] = to_string(s.high);
      break;
    case DistributionKind::kDiscrete: {
      Json values = Json::array(), probs = Json::array();
      for (const Rational& v : s.values) values.push_back(to_string(v));
      for (const Rational& p : s.probs) probs.push_back(to_string(p));
      j["values"] = values;
      j["probs"] = probs;
      break;
    }
  }
  if (s.bound != s.support_max()) j["bound"] = to_string(s.bound);
  return j;
}

DistributionSpec dist_from_json(const Json& j, const Rational& mean,
                                const std::string& ctx) {
  const Json& kind = require(j, "kind", ctx);
  if (!kind.is_string()) throw ParseError(field(ctx, "kind"), "expected text");
  const std::string name = kind.get<std::string>();
  DistributionSpec s;
  if (name == "constant") {
    s = DistributionSpec::constant(mean);
  } else if (name == "uniform") {
    s = DistributionSpec::uniform(
        rational_field(require(j, "low", ctx), field(ctx, "low")),
        rational_field(require(j, "high", ctx), field(ctx, "high")));
  } else if (name == "bernoulli") {
    s = DistributionSpec::scaled_bernoulli(
        rational_field(require(j, "p", ctx), field(ctx, "p")),
        rational_field(require(j, "high", ctx), field(ctx, "high")));
  } else if (name == "discrete") {
    std::vector<Rational> values, probs;
    const std::string vctx = field(ctx, "values"), pctx = field(ctx, "probs");
    const Json& vj = require_array(require(j, "values", ctx), vctx);
    const Json& pj = require_array(require(j, "probs", ctx), pctx);
    for (std::size_t i = 0; i < vj.size(); ++i) {
      values.push_back(rational_field(vj[i], field(vctx, i)));
    }
    for (std::size_t i = 0; i < pj.size(); ++i) {
      probs.push_back(rational_field(pj[i], field(pctx, i)));
    }
    s = DistributionSpec::discrete(std::move(values), std::move(probs));
  } else {
    throw ParseError(field(ctx, "kind"), "unknown distribution '" + name + "'");
  }
  if (j.contains("bound")) {
    s.bound = rational_field(j["bound"], field(ctx, "bound"));
  }
  try {
    s.validate();
  } catch (const InputError& e) {
    throw ParseError(ctx, e.what());
  }
  if (s.mean != mean) {
    throw ParseError(ctx, "distribution mean " + to_string(s.mean) +
                              " differs from d_mean " + to_string(mean));
  }
  return s;
}

Json item_to_json(const CheckItem& item) {
  Json j;
  j["name"] = item.name;
  j["passed"] = item.passed;
  if (!item.detail.empty()) j["detail"] = item.detail;
  if (!item.lhs.empty() || !item.rhs.empty()) {
    j["lhs"] = item.lhs;
    j["rhs"] = item.rhs;
  }
  return j;
}

std::string optional_text(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it != j.end() && it->is_string() ? it->get<std::string>()
                                          : std::string();
}

}  // namespace

std::optional<std::uint64_t> NetworkDocument::seed() const {
  auto it = meta.find("seed");
  if (it == meta.end() || !it->is_number_unsigned()) return std::nullopt;
  return it->get<std::uint64_t>();
}

NetworkDocument make_network_document(Graph g, Endowments d, Json meta) {
  NetworkDocument doc;
  for (const auto& [id, mean] : d.means) {
    doc.dists[id] = DistributionSpec::constant(mean);
  }
  doc.graph = std::move(g);
  doc.endowments = std::move(d);
  doc.meta = std::move(meta);
  return doc;
}

Json network_to_json(const NetworkDocument& doc) {
  Json j;
  Json nodes = Json::array();
  for (NodeId id : doc.graph.nodes()) {
    Json node;
    node["id"] = id;
    node["d_mean"] = to_string(doc.endowments.at(id));
    auto it = doc.dists.find(id);
    node["dist"] = it == doc.dists.end()
                       ? dist_to_json(DistributionSpec::constant(
                             doc.endowments.at(id)))
                       : dist_to_json(it->second);
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : doc.graph.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  j["bound"] = to_string(doc.endowments.bound);
  j["meta"] = doc.meta;
  return j;
}

NetworkDocument network_from_json(const Json& j) {
  const Json& nodes = require_array(require(j, "nodes", ""), "nodes");
  const Json& edges = require_array(require(j, "edges", ""), "edges");
  std::vector<NodeId> ids;
  std::map<NodeId, Rational> means;
  std::map<NodeId, DistributionSpec> dists;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string ctx = field("nodes", i);
    NodeId id = id_field(require(nodes[i], "id", ctx), field(ctx, "id"));
    Rational mean =
        rational_field(require(nodes[i], "d_mean", ctx), field(ctx, "d_mean"));
    if (mean <= 0) throw ParseError(field(ctx, "d_mean"), "must be positive");
    if (means.count(id)) throw ParseError(field(ctx, "id"), "duplicate id");
    ids.push_back(id);
    means[id] = mean;
    dists[id] = nodes[i].contains("dist")
                    ? dist_from_json(nodes[i]["dist"], mean, field(ctx, "dist"))
                    : DistributionSpec::constant(mean);
  }
  std::vector<Edge> edge_list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ctx = field("edges", i);
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw ParseError(ctx, "expected a pair [u, v]");
    }
    edge_list.emplace_back(id_field(edges[i][0], field(ctx, 0)),
                           id_field(edges[i][1], field(ctx, 1)));
  }

  NetworkDocument doc;
  try {
    doc.graph = Graph(std::move(ids), std::move(edge_list));
  } catch (const InputError& e) {
    throw ParseError("edges", e.what());
  }
  Rational bound(0);
  for (const auto& [id, s] : dists) bound = std::max(bound, s.bound);
  if (j.contains("bound")) {
    Rational declared = rational_field(j["bound"], "bound");
    if (declared < bound) {
      throw ParseError("bound", "smaller than a distribution bound " +
                                    to_string(bound));
    }
    bound = declared;
  }
  doc.endowments = make_endowments(std::move(means), bound);
  doc.dists = std::move(dists);
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw ParseError("meta", "expected an object");
    doc.meta = j["meta"];
  }
  return doc;
}

std::string network_hash(const Graph& g, const Endowments& d) {
  std::string canon = "nodes";
  for (NodeId id : g.nodes()) {
    canon += ";" + std::to_string(id) + "=" + to_string(d.at(id));
  }
  canon += "|edges";
  for (const auto& [a, b] : g.edges()) {
    canon += ";" + std::to_string(a) + "-" + std::to_string(b);
  }
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json solution_to_json(const SolutionDocument& doc) {
  const LevelDecomposition& dec = doc.decomposition;
  Json j;
  j["format"] = "fairshare-solution";
  if (auto seed = doc.network.seed()) j["seed"] = *seed;
  j["network_hash"] =
      network_hash(doc.network.graph, doc.network.endowments);
  j["float_precision"] = kFloatDigits;
  Json levels = Json::array(), levels_float = Json::array();
  for (const Rational& v : dec.levels) {
    levels.push_back(to_string(v));
    levels_float.push_back(rounded(to_double(v), kFloatDigits));
  }
  j["levels"] = levels;
  j["levels_float"] = levels_float;
  Json sets = Json::array();
  for (const NodeSet& s : dec.level_sets) sets.push_back(s);
  j["level_sets"] = sets;

  Json nodes = Json::array();
  for (const auto& [id, rho] : dec.ratios) {
    Json node;
    node["id"] = id;
    node["ratio"] = to_string(rho);
    node["ratio_float"] = rounded(to_double(rho), kFloatDigits);
    auto r = dec.received.find(id);
    if (r != dec.received.end()) {
      node["received"] = to_string(r->second);
      node["received_float"] = rounded(to_double(r->second), kFloatDigits);
    }
    nodes.push_back(node);
  }
  j["nodes"] = nodes;

  Json transfers = Json::array();
  for (const auto& [key, amount] : doc.allocation.transfers) {
    Json t;
    t["from"] = key.first;
    t["to"] = key.second;
    t["amount"] = to_string(amount);
    t["amount_float"] = rounded(to_double(amount), kFloatDigits);
    transfers.push_back(t);
  }
  j["allocation"] = transfers;
  if (doc.certification) j["certification"] = report_to_json(*doc.certification);
  j["network"] = network_to_json(doc.network);
  return j;
}

SolutionDocument solution_from_json(const Json& j) {
  SolutionDocument doc;
  doc.network = network_from_json(require(j, "network", ""));
  const Json& hash = require(j, "network_hash", "");
  std::string expected =
      network_hash(doc.network.graph, doc.network.endowments);
  if (!hash.is_string() || hash.get<std::string>() != expected) {
    throw ParseError("network_hash",
                     "does not match the embedded network (" + expected + ")");
  }

  LevelDecomposition& dec = doc.decomposition;
  const Json& levels = require_array(require(j, "levels", ""), "levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    dec.levels.push_back(rational_field(levels[i], field("levels", i)));
  }
  const Json& sets = require_array(require(j, "level_sets", ""), "level_sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string ctx = field("level_sets", i);
    std::vector<NodeId> ids;
    for (std::size_t k = 0; k < require_array(sets[i], ctx).size(); ++k) {
      ids.push_back(id_field(sets[i][k], field(ctx, k)));
    }
    dec.level_sets.push_back(make_node_set(std::move(ids)));
  }
  const Json& nodes = require_array(require(j, "nodes", ""), "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string ctx = field("nodes", i);
    NodeId id = id_field(require(nodes[i], "id", ctx), field(ctx, "id"));
    dec.ratios[id] =
        rational_field(require(nodes[i], "ratio", ctx), field(ctx, "ratio"));
    if (nodes[i].contains("received")) {
      dec.received[id] =
          rational_field(nodes[i]["received"], field(ctx, "received"));
    }
  }
  const Json& transfers =
      require_array(require(j, "allocation", ""), "allocation");
  for (std::size_t i = 0; i < transfers.size(); ++i) {
    const std::string ctx = field("allocation", i);
    NodeId from = id_field(require(transfers[i], "from", ctx), field(ctx, "from"));
    NodeId to = id_field(require(transfers[i], "to", ctx), field(ctx, "to"));
    doc.allocation.transfers[{from, to}] = rational_field(
        require(transfers[i], "amount", ctx), field(ctx, "amount"));
  }
  if (j.contains("certification")) {
    doc.certification = report_from_json(j["certification"]);
  }
  return doc;
}

Json report_to_json(const CheckReport& report) {
  Json j;
  j["title"] = report.title;
  j["ok"] = report.ok();
  Json items = Json::array();
  for (const CheckItem& item : report.items) items.push_back(item_to_json(item));
  j["items"] = items;
  return j;
}

CheckReport report_from_json(const Json& j) {
  CheckReport report;
  const Json& title = require(j, "title", "report");
  if (!title.is_string()) throw ParseError("report.title", "expected text");
  report.title = title.get<std::string>();
  const Json& items = require_array(require(j, "items", "report"),
                                    "report.items");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string ctx = field("report.items", i);
    const Json& name = require(items[i], "name", ctx);
    const Json& passed = require(items[i], "passed", ctx);
    if (!name.is_string() || !passed.is_boolean()) {
      throw ParseError(ctx, "expected a name string and a passed flag");
    }
    report.add(name.get<std::string>(), passed.get<bool>(),
               optional_text(items[i], "detail"),
               optional_text(items[i], "lhs"), optional_text(items[i], "rhs"));
  }
  return report;
}

Json stability_to_json(const StabilityReport& report) {
  Json j;
  j["title"] = "strong stability";
  j["ok"] = report.ok();
  j["mode"] = to_string(report.mode);
  j["checked_coalitions"] = report.checked_coalitions;
  if (report.blocking) {
    Json witness;
    witness["coalition"] = report.blocking->coalition;
    Json rates = Json::object();
    for (const auto& [id, r] : report.blocking->improving_rates) {
      rates[std::to_string(id)] = to_string(r);
    }
    witness["improving_rates"] = rates;
    j["blocking"] = witness;
  }
  return j;
}

Json metrics_to_json(const ConvergenceMetrics& m) {
  Json j;
  j["final_error"] = rounded(m.final_error, kFloatDigits);
  j["final_lyapunov"] = rounded(m.final_lyapunov, kFloatDigits);
  Json bands = Json::array();
  for (const auto& [band, entry] : m.band_entry) {
    Json b;
    b["band"] = band;
    b["first_slot"] = entry ? Json(*entry) : Json(nullptr);
    bands.push_back(b);
  }
  j["band_entry"] = bands;
  j["lyapunov_nonincreasing_fraction"] =
      rounded(m.lyapunov_nonincreasing_fraction, kFloatDigits);
  j["lyapunov_rank_correlation"] =
      rounded(m.lyapunov_rank_correlation, kFloatDigits);
  Json series = Json::array();
  for (const Checkpoint& cp : m.checkpoints) {
    series.push_back({cp.t, rounded(cp.max_ratio_error, kFloatDigits),
                      rounded(cp.lyapunov, kFloatDigits)});
  }
  j["columns"] = {"t", "max_ratio_error", "lyapunov"};
  j["series"] = series;
  return j;
}

void write_gnuplot_data(std::ostream& out, const ConvergenceMetrics& m) {
  out << "# t max_ratio_error lyapunov\n";
  for (const Checkpoint& cp : m.checkpoints) {
    out << cp.t << ' ' << render(cp.max_ratio_error, kFloatDigits) << ' '
        << render(cp.lyapunov, kFloatDigits) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  out << kTraceHeader << '\n';
  for (const SimRecord& rec : trace.records) {
    for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
      out << rec.t << ',' << trace.nodes[i] << ',' << render(rec.r_bar[i])
          << ',' << render(rec.rho[i]) << ',' << render(rec.estimate[i])
          << ',';
      if (rec.lyapunov) out << render(*rec.lyapunov);
      out << '\n';
    }
  }
}

SimTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw ParseError("line 1", std::string("expected header '") +
                                   kTraceHeader + "'");
  }
  SimTrace trace;
  bool nodes_fixed = false;
  std::size_t column = 0;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    const std::string ctx = "line " + std::to_string(number);
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 6) throw ParseError(ctx, "expected 6 columns");

    std::int64_t t = parse_int(cells[0], ctx + " column t");
    NodeId node = parse_int(cells[1], ctx + " column node");
    if (trace.records.empty() || trace.records.back().t != t) {
      if (!trace.records.empty()) {
        if (t <= trace.records.back().t) {
          throw ParseError(ctx, "slots must increase");
        }
        if (column != trace.nodes.size()) {
          throw ParseError(ctx, "previous slot has missing nodes");
        }
        nodes_fixed = true;
      }
      trace.records.push_back(SimRecord{t, {}, {}, {}, std::nullopt});
      column = 0;
    }
    if (nodes_fixed) {
      if (column >= trace.nodes.size() || trace.nodes[column] != node) {
        throw ParseError(ctx, "node order differs from the first slot");
      }
    } else {
      trace.nodes.push_back(node);
    }
    ++column;
    SimRecord& rec = trace.records.back();
    rec.r_bar.push_back(parse_double(cells[2], ctx + " column r_bar"));
    rec.rho.push_back(parse_double(cells[3], ctx + " column rho"));
    rec.estimate.push_back(parse_double(cells[4], ctx + " column estimate"));
    if (!cells[5].empty()) {
      rec.lyapunov = parse_double(cells[5], ctx + " column V");
    }
  }
  if (!trace.records.empty() && column != trace.nodes.size()) {
    throw ParseError("end of file", "last slot has missing nodes");
  }
  return trace;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + " byte " + std::to_string(e.byte), e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace fairshare
