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

#include <sstream>

#include <gtest/gtest.h>

#include "fairshare/errors.h"
#include "fairshare/lexopt.h"

namespace fairshare {
namespace {

std::string fixture(const std::string& name) {
  return std::string(FAIRSHARE_FIXTURES) + "/" + name;
}

NetworkDocument mixed_network() {
  Graph g({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
  NetworkDocument doc = make_network_document(
      g, make_endowments({{1, 1}, {2, Rational(1, 3)}, {3, 2}, {4, 5}}, 10),
      Json{{"seed", 42u}, {"note", "mixed"}});
  doc.dists[1] = DistributionSpec::uniform(0, 2);
  doc.dists[2] = DistributionSpec::constant(Rational(1, 3));
  doc.dists[3] = DistributionSpec::scaled_bernoulli(Rational(1, 4), 8);
  doc.dists[4] = DistributionSpec::discrete({0, 10}, {Rational(1, 2),
                                                      Rational(1, 2)});
  return doc;
}

void expect_parse_error(const std::string& text, const std::string& context) {
  try {
    network_from_json(Json::parse(text));
    FAIL() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.context(), context) << e.what();
  }
}

TEST(NetworkIoTest, RoundTrip) {
  NetworkDocument doc = mixed_network();
  Json j = network_to_json(doc);
  NetworkDocument back = network_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(back.seed(), 42u);
  EXPECT_EQ(j["nodes"][1]["d_mean"], "1/3");
  EXPECT_EQ(j["nodes"][0]["dist"]["kind"], "uniform");
}

TEST(NetworkIoTest, LoadsBundledFixtures) {
  NetworkDocument path = network_from_json(read_json_file(fixture("path3.json")));
  EXPECT_EQ(path.graph.size(), 3u);
  EXPECT_EQ(path.endowments.bound, 1);
  EXPECT_FALSE(path.seed());
  NetworkDocument six = network_from_json(read_json_file(fixture("six_node.json")));
  EXPECT_EQ(six.endowments.at(6), 60);
  EXPECT_EQ(six.dists.at(6), DistributionSpec::constant(60));
}

TEST(NetworkIoTest, ErrorsNameTheField) {
  expect_parse_error(R"({"edges": []})", "nodes");
  expect_parse_error(R"({"nodes": [{"id": 1}], "edges": []})",
                     "nodes[0].d_mean");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1/0"}], "edges": []})",
      "nodes[0].d_mean");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "-2"}], "edges": []})",
      "nodes[0].d_mean");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1"}, {"id": 1, "d_mean": "1"}],
          "edges": []})",
      "nodes[1].id");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1"}], "edges": [[1]]})", "edges[0]");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1"}], "edges": [[1, 2]]})", "edges");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1",
                     "dist": {"kind": "uniform", "low": "0", "high": "4"}}],
          "edges": []})",
      "nodes[0].dist");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "1", "dist": {"kind": "normal"}}],
          "edges": []})",
      "nodes[0].dist.kind");
  expect_parse_error(
      R"({"nodes": [{"id": 1, "d_mean": "2",
                     "dist": {"kind": "uniform", "low": "0", "high": "4"}}],
          "edges": [], "bound": "3"})",
      "bound");
  EXPECT_THROW(read_json_file(fixture("missing.json")), ParseError);
}

SolutionDocument solved(const NetworkDocument& net, bool certify) {
  SolutionDocument doc;
  doc.network = net;
  doc.decomposition = peel_solve(net.graph, net.endowments);
  doc.allocation =
      extract_allocation(net.graph, net.endowments, doc.decomposition);
  if (certify) {
    doc.certification =
        certify_lexopt(net.graph, net.endowments, doc.decomposition);
  }
  return doc;
}

TEST(SolutionIoTest, RoundTripAndRendering) {
  for (bool certify : {false, true}) {
    SolutionDocument doc = solved(mixed_network(), certify);
    Json j = solution_to_json(doc);
    EXPECT_EQ(solution_from_json(Json::parse(j.dump())), doc);
    EXPECT_EQ(j["seed"], 42u);
    EXPECT_EQ(j["float_precision"], 12);
  }
  NetworkDocument path = network_from_json(read_json_file(fixture("path3.json")));
  Json j = solution_to_json(solved(path, false));
  EXPECT_EQ(j["levels"], (Json{"1/2", "2"}));
  EXPECT_EQ(j["levels_float"][0], 0.5);

  NetworkDocument thirds = make_network_document(
      Graph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}}),
      make_endowments({{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  Json jt = solution_to_json(solved(thirds, false));
  EXPECT_EQ(jt["levels"][0], "1/3");
  EXPECT_EQ(jt["levels_float"][0].get<double>(), 0.333333333333);
}

TEST(SolutionIoTest, RejectsHashMismatchAndBadFields) {
  Json j = solution_to_json(solved(mixed_network(), false));
  Json tampered = j;
  tampered["network"]["nodes"][0]["d_mean"] = "2";
  tampered["network"]["nodes"][0]["dist"] = Json{{"kind", "constant"}};
  EXPECT_THROW(solution_from_json(tampered), ParseError);

  Json bad_level = j;
  bad_level["levels"][0] = "x";
  try {
    solution_from_json(bad_level);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.context(), "levels[0]");
  }
  Json no_alloc = j;
  no_alloc.erase("allocation");
  EXPECT_THROW(solution_from_json(no_alloc), ParseError);
}

TEST(ReportIoTest, CheckReportRoundTrip) {
  CheckReport rep;
  rep.title = "demo";
  rep.add("first", true);
  rep.add("second", false, "why", "1/2", "1");
  Json j = report_to_json(rep);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(report_from_json(j), rep);
}

SimTrace sample_trace(bool with_v) {
  SimTrace t;
  t.nodes = {1, 5};
  t.records.push_back({1, {0.5, 1.0 / 3.0}, {0.25, 2}, {2, 1}, std::nullopt});
  t.records.push_back({4, {0.1, 1e-300}, {0.3, 7}, {2, 1}, std::nullopt});
  if (with_v) {
    t.records[0].lyapunov = 0.125;
    t.records[1].lyapunov = 2.0 / 3.0;
  }
  return t;
}

void expect_same(const SimTrace& a, const SimTrace& b) {
  ASSERT_EQ(a.nodes, b.nodes);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].t, b.records[k].t);
    EXPECT_EQ(a.records[k].r_bar, b.records[k].r_bar);
    EXPECT_EQ(a.records[k].rho, b.records[k].rho);
    EXPECT_EQ(a.records[k].estimate, b.records[k].estimate);
    EXPECT_EQ(a.records[k].lyapunov, b.records[k].lyapunov);
  }
}

TEST(TraceIoTest, RoundTripIsExact) {
  for (bool with_v : {false, true}) {
    std::stringstream csv;
    write_trace_csv(csv, sample_trace(with_v));
    std::string text = csv.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "t,node,r_bar,rho,estimate,V");
    std::istringstream in(text);
    expect_same(read_trace_csv(in), sample_trace(with_v));
  }
}

void expect_trace_error(const std::string& text, const std::string& context) {
  std::istringstream in(text);
  try {
    read_trace_csv(in);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.context().substr(0, context.size()), context) << e.what();
  }
}

TEST(TraceIoTest, ErrorsNameTheLine) {
  const std::string header = "t,node,r_bar,rho,estimate,V\n";
  expect_trace_error("t,node\n", "line 1");
  expect_trace_error(header + "1,1,0.5,0.5,1,\n1,2,abc,0.5,1,\n",
                     "line 3 column r_bar");
  expect_trace_error(header + "1,1,0.5,0.5,1\n", "line 2");
  expect_trace_error(header + "2,1,0,0,1,\n1,1,0,0,1,\n", "line 3");
  expect_trace_error(header + "1,1,0,0,1,\n1,2,0,0,1,\n2,1,0,0,1,\n",
                     "end of file");
  expect_trace_error(header + "1,1,0,0,1,\n1,2,0,0,1,\n2,2,0,0,1,\n",
                     "line 4");
}

TEST(ReportIoTest, MetricsAndGnuplotColumns) {
  ConvergenceMetrics m;
  m.checkpoints = {{10, 0.5, 2}, {20, 0.05, 0.25}};
  m.band_entry = {{0.01, std::nullopt}, {0.05, 20}, {0.1, 20}};
  m.final_error = 0.05;
  m.final_lyapunov = 0.25;
  Json j = metrics_to_json(m);
  EXPECT_EQ(j["series"].size(), 2u);
  EXPECT_TRUE(j["band_entry"][0]["first_slot"].is_null());
  EXPECT_EQ(j["band_entry"][1]["first_slot"], 20);
  std::ostringstream dat;
  write_gnuplot_data(dat, m);
  EXPECT_EQ(dat.str(), "# t max_ratio_error lyapunov\n10 0.5 2\n20 0.05 0.25\n");
}

TEST(HashTest, DependsOnGraphAndEndowments) {
  Graph g({1, 2}, {{1, 2}});
  std::string h = network_hash(g, make_endowments({{1, 1}, {2, 1}}));
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, network_hash(g, make_endowments({{1, 1}, {2, 1}})));
  EXPECT_NE(h, network_hash(g, make_endowments({{1, 1}, {2, 2}})));
  EXPECT_NE(h, network_hash(Graph({1, 2}, {}), make_endowments({{1, 1}, {2, 1}})));
}

}  // namespace
}  // namespace fairshare
