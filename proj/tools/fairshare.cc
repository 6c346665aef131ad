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

// Command-line front end.
//
// Exit codes: 0 success, 1 a requested check failed, 2 malformed input or
// usage, 3 a size cap or generation budget was exceeded, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fairshare/dynamics.h"
#include "fairshare/errors.h"
#include "fairshare/io.h"
#include "fairshare/lexopt.h"
#include "fairshare/netgen.h"
#include "fairshare/verify.h"

namespace fs = fairshare;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapacity = 3;
constexpr int kInternal = 4;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    fs::write_text_file(path, text);
  }
}

std::string dump(const fs::Json& j) { return j.dump(2) + "\n"; }

struct GenerateArgs {
  std::string model = "lattice";
  int rows = 5, cols = 6, n = 30, m = 1, k = 4;
  double p = 0.2, power = 1.0, beta = 0.1;
  std::uint64_t seed = 0;
  std::string endowment = "homogeneous";
  std::string d = "30", hot_d = "300";
  int hot_count = 0;
  std::vector<fs::NodeId> hot_ids;
  bool allow_disconnected = false;
  int max_attempts = 1000;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  fs::GenSpec spec;
  spec.seed = a.seed;
  spec.require_connected = !a.allow_disconnected;
  spec.max_attempts = a.max_attempts;
  fs::Json meta;
  meta["generator"] = a.model;
  switch (fs::parse_model_kind(a.model)) {
    case fs::ModelKind::kLattice:
      spec.model = fs::ModelSpec::lattice(a.rows, a.cols);
      meta["rows"] = a.rows;
      meta["cols"] = a.cols;
      break;
    case fs::ModelKind::kErdosRenyi:
      spec.model = fs::ModelSpec::erdos_renyi(a.n, a.p);
      meta["n"] = a.n;
      meta["p"] = a.p;
      break;
    case fs::ModelKind::kBarabasiAlbert:
      spec.model = fs::ModelSpec::barabasi_albert(a.n, a.m, a.power);
      meta["n"] = a.n;
      meta["m"] = a.m;
      meta["power"] = a.power;
      break;
    case fs::ModelKind::kWattsStrogatz:
      spec.model = fs::ModelSpec::watts_strogatz(a.n, a.k, a.beta);
      meta["n"] = a.n;
      meta["k"] = a.k;
      meta["beta"] = a.beta;
      break;
  }
  fs::Rational base = fs::parse_rational(a.d);
  if (a.endowment == "homogeneous") {
    spec.endowment = fs::EndowmentSpec::homogeneous(base);
  } else if (a.endowment == "hotspots") {
    fs::Rational hot = fs::parse_rational(a.hot_d);
    spec.endowment =
        a.hot_ids.empty()
            ? fs::EndowmentSpec::hotspot_random(base, a.hot_count, hot)
            : fs::EndowmentSpec::hotspot_listed(base, a.hot_ids, hot);
  } else {
    throw fs::InputError("unknown endowment profile '" + a.endowment + "'");
  }
  meta["endowment"] = a.endowment;
  meta["seed"] = a.seed;

  fs::Network net = fs::generate(spec);
  meta["attempts"] = net.attempts;
  fs::NetworkDocument doc = fs::make_network_document(
      std::move(net.graph), std::move(net.endowments), meta);
  emit(a.out, dump(fs::network_to_json(doc)));
  return kOk;
}

int run_solve(const std::string& in, const std::string& out, bool certify) {
  fs::SolutionDocument doc;
  doc.network = fs::network_from_json(fs::read_json_file(in));
  const fs::Graph& g = doc.network.graph;
  const fs::Endowments& d = doc.network.endowments;
  doc.decomposition = fs::peel_solve(g, d);
  doc.allocation = fs::extract_allocation(g, d, doc.decomposition);
  if (certify) doc.certification = fs::certify_lexopt(g, d, doc.decomposition);
  emit(out, dump(fs::solution_to_json(doc)));
  if (doc.certification && !doc.certification->ok()) {
    std::cerr << "certification failed\n";
    return kCheckFailed;
  }
  return kOk;
}

struct VerifyArgs {
  std::string in;
  std::vector<std::string> checks{"structure", "equilibrium", "stability"};
  std::string mode = "exhaustive";
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  fs::SolutionDocument doc =
      fs::solution_from_json(fs::read_json_file(a.in));
  const fs::Graph& g = doc.network.graph;
  const fs::Endowments& d = doc.network.endowments;
  fs::Json result;
  result["solution"] = a.in;
  result["seed"] = a.seed;
  fs::Json reports = fs::Json::array();
  bool ok = true;
  for (const std::string& check : a.checks) {
    if (check == "structure") {
      fs::CheckReport r = fs::check_structure(g, d, doc.decomposition);
      ok = ok && r.ok();
      reports.push_back(fs::report_to_json(r));
    } else if (check == "equilibrium") {
      fs::CheckReport r = fs::check_sharing_equilibrium(
          g, d, doc.allocation, doc.decomposition);
      ok = ok && r.ok();
      reports.push_back(fs::report_to_json(r));
    } else if (check == "certificate") {
      fs::CheckReport r = fs::certify_lexopt(g, d, doc.decomposition);
      ok = ok && r.ok();
      reports.push_back(fs::report_to_json(r));
    } else if (check == "stability") {
      fs::StabilityReport r = fs::find_blocking_coalition(
          g, d, doc.decomposition.received, fs::parse_stability_mode(a.mode),
          a.budget, a.seed);
      ok = ok && r.ok();
      reports.push_back(fs::stability_to_json(r));
    } else {
      throw fs::InputError("unknown check '" + check + "'");
    }
  }
  result["ok"] = ok;
  result["reports"] = reports;
  emit(a.out, dump(result));
  return ok ? kOk : kCheckFailed;
}

struct SimulateArgs {
  std::string in;
  std::int64_t steps = 1000;
  std::string estimator = "exact";
  double alpha = 0.9;
  std::string tie_break = "split";
  std::uint64_t seed = 0;
  std::int64_t record_every = 1;
  std::string reference;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  fs::NetworkDocument net = fs::network_from_json(fs::read_json_file(a.in));
  fs::SimConfig cfg;
  cfg.horizon = a.steps;
  cfg.estimator = fs::parse_estimator(a.estimator);
  cfg.alpha = a.alpha;
  cfg.tie_break = fs::parse_tie_break(a.tie_break);
  cfg.seed = a.seed;
  cfg.record_every = a.record_every;
  std::optional<fs::RateVector> reference;
  if (!a.reference.empty()) {
    fs::SolutionDocument sol =
        fs::solution_from_json(fs::read_json_file(a.reference));
    if (!(sol.network.graph == net.graph) ||
        !(sol.network.endowments.means == net.endowments.means)) {
      throw fs::InputError("reference solution is for a different network");
    }
    reference = sol.decomposition.received;
  }
  fs::SimTrace trace = fs::run(net.graph, net.dists, cfg, reference);
  std::ostringstream csv;
  fs::write_trace_csv(csv, trace);
  emit(a.out, csv.str());
  return kOk;
}

int run_report(const std::string& trace_path, const std::string& solution,
               const std::string& out, const std::string& dat) {
  std::ifstream in(trace_path);
  if (!in) throw fs::ParseError(trace_path, "cannot open file");
  fs::SimTrace trace;
  try {
    trace = fs::read_trace_csv(in);
  } catch (const fs::ParseError& e) {
    throw fs::ParseError(trace_path + " " + e.context(), e.what());
  }
  fs::SolutionDocument sol =
      fs::solution_from_json(fs::read_json_file(solution));
  fs::ConvergenceMetrics m = fs::convergence_report(
      trace, sol.decomposition.received, sol.network.endowments);
  fs::Json j;
  j["trace"] = trace_path;
  j["solution"] = solution;
  if (auto seed = sol.network.seed()) j["seed"] = *seed;
  j["metrics"] = fs::metrics_to_json(m);
  if (!dat.empty()) {
    std::ostringstream data;
    fs::write_gnuplot_data(data, m);
    fs::write_text_file(dat, data.str());
    j["gnuplot"] = "set logscale y; plot '" + dat +
                   "' using 1:2 with lines title 'max ratio error', '' using "
                   "1:3 with lines title 'V'";
  }
  emit(out, dump(j));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-min fair resource sharing on graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a network");
  generate->add_option("--model", gen.model, "lattice, er, ba or ws");
  generate->add_option("--rows", gen.rows);
  generate->add_option("--cols", gen.cols);
  generate->add_option("--n", gen.n, "node count (er, ba, ws)");
  generate->add_option("--p", gen.p, "edge probability (er)");
  generate->add_option("--m", gen.m, "links per new node (ba)");
  generate->add_option("--power", gen.power, "attachment exponent (ba)");
  generate->add_option("--k", gen.k, "ring degree (ws)");
  generate->add_option("--beta", gen.beta, "rewiring probability (ws)");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--endowment", gen.endowment, "homogeneous or hotspots");
  generate->add_option("--d", gen.d, "base endowment");
  generate->add_option("--hot-d", gen.hot_d, "hotspot endowment");
  generate->add_option("--hot-count", gen.hot_count);
  generate->add_option("--hot-ids", gen.hot_ids)->delimiter(',');
  generate->add_flag("--allow-disconnected", gen.allow_disconnected);
  generate->add_option("--max-attempts", gen.max_attempts);
  generate->add_option("-o,--output", gen.out);

  std::string solve_in, solve_out;
  bool certify = false;
  auto* solve = app.add_subcommand("solve", "Compute the lex-optimal ratios");
  solve->add_option("graph", solve_in)->required();
  solve->add_option("-o,--output", solve_out);
  solve->add_flag("--certify", certify);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a solution document");
  verify->add_option("solution", ver.in)->required();
  verify->add_option("--checks", ver.checks,
                     "structure, equilibrium, stability, certificate")
      ->delimiter(',');
  verify->add_option("--stability-mode", ver.mode, "exhaustive or sampled");
  verify->add_option("--budget", ver.budget, "sampled coalitions");
  verify->add_option("--seed", ver.seed);
  verify->add_option("-o,--output", ver.out);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate the policy");
  simulate->add_option("graph", sim.in)->required();
  simulate->add_option("--steps", sim.steps);
  simulate->add_option("--estimator", sim.estimator,
                       "exact, running or discounted");
  simulate->add_option("--alpha", sim.alpha);
  simulate->add_option("--tie-break", sim.tie_break, "split, lowest or random");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--record-every", sim.record_every);
  simulate->add_option("--reference", sim.reference, "solution document");
  simulate->add_option("-o,--output", sim.out);

  std::string rep_trace, rep_solution, rep_out, rep_dat;
  auto* report = app.add_subcommand("report", "Convergence metrics");
  report->add_option("trace", rep_trace)->required();
  report->add_option("solution", rep_solution)->required();
  report->add_option("-o,--output", rep_out);
  report->add_option("--dat", rep_dat, "gnuplot data file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve) return run_solve(solve_in, solve_out, certify);
    if (*verify) return run_verify(ver);
    if (*simulate) return run_simulate(sim);
    if (*report) return run_report(rep_trace, rep_solution, rep_out, rep_dat);
  } catch (const fs::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const fs::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const fs::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}
