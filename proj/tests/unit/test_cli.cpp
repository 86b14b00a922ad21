#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "evroute/cli.hpp"
#include "evroute/routing.hpp"
#include "test_support.hpp"

namespace evroute {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("evroute-test-" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::vector<std::string> row(const std::string& table, const std::string& label) {
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(label + "  ", 0) == 0) {
      std::istringstream cells(line.substr(label.size()));
      std::vector<std::string> out;
      std::string c;
      while (cells >> c) out.push_back(c);
      return out;
    }
  }
  return {};
}

TEST(Cli, RouteFifoTable) {
  const CliResult r = run({"route", "--alg", "fifo", "--from", "10", "--to", "6", "--depart", "0", "--soc", "100",
                     "--edges", "1-7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(row(r.out, "Route"), (std::vector<std::string>{"10-9", "9-8", "8-7", "7-6", "Total"}));
  EXPECT_EQ(row(r.out, "Time"), (std::vector<std::string>{"1.48", "1.62", "1.13", "1.52", "5.75"}));
  EXPECT_EQ(row(r.out, "SOC").back(), "23%");
  EXPECT_EQ(row(r.out, "Reliability").back(), "88.06%");
  EXPECT_TRUE(row(r.out, "Waiting").empty());
}

TEST(Cli, RouteWsdotTable) {
  const CliResult r = run({"route", "--alg", "wsdot", "--from", "10", "--to", "6", "--deadline", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(row(r.out, "Waiting time").back(), "4.11");
  const auto travel = row(r.out, "Travel time");
  ASSERT_GE(travel.size(), 2u);
  EXPECT_EQ(travel[travel.size() - 2] + " " + travel.back(), "8.17, 4.06");
  EXPECT_EQ(row(r.out, "Route").front(), "6-7");
  EXPECT_NEAR(std::stod(row(r.out, "Reliability").back()), 91.29, 0.05);
}

TEST(Cli, TableTotalsAreConsistentWithCells) {
  for (const auto& alg : {"dot", "wsdot"}) {
    const CliResult r = run({"route", "--alg", alg, "--deadline", "16", "--charge-policy", "target:74"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto times = row(r.out, "Time");
    double sum = 0;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) sum += std::stod(times[i]);
    EXPECT_NEAR(sum, std::stod(times.back()), 0.011) << alg;
    const auto use = row(r.out, "Consumption");
    double energy = 0;
    for (std::size_t i = 0; i + 1 < use.size(); ++i) energy += std::stod(use[i]);
    EXPECT_NEAR(energy, std::stod(use.back()), 1e-9);
  }
}

TEST(Cli, RouteJsonRoundTrips) {
  const CliResult r = run({"route", "--alg", "dot", "--deadline", "16", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  TripRequest req;
  req.origin = 10;
  req.destination = 6;
  EXPECT_EQ(itinerary_from_json(r.out), route_dot(testing::fixture(), req, 16.0));
}

TEST(Cli, ExitCodes) {
  CliResult r = run({"route", "--alg", "fifo", "--soc", "10"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("no feasible solution"), std::string::npos);
  EXPECT_EQ(run({"route", "--alg", "fifo", "--to", "0"}).code, 2);
  EXPECT_EQ(run({"route", "--alg", "dot", "--deadline", "1"}).code, 4);
  EXPECT_EQ(run({"route", "--alg", "dot"}).code, 1);
  EXPECT_EQ(run({"route", "--alg", "fifo", "--deadline", "16"}).code, 1);
  EXPECT_EQ(run({"route", "--alg", "dot", "--deadline", "16", "--depart", "3"}).code, 1);
  EXPECT_EQ(run({"route", "--alg", "astar"}).code, 1);
  EXPECT_EQ(run({"route", "--charge-policy", "turbo"}).code, 1);
  EXPECT_EQ(run({"route", "--soc", "150"}).code, 1);
  EXPECT_EQ(run({"route", "--from", "77"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, ScenarioASeedsTheDeadline) {
  const CliResult r = run({"route", "--alg", "wsdot", "--scenario", "A", "--depart", "0"});
  EXPECT_EQ(r.code, 4) << r.out;
  EXPECT_EQ(run({"route", "--alg", "wsdot", "--scenario", "B", "--deadline", "16"}).code, 0);
}

TEST(Cli, Paths) {
  CliResult r = run({"paths", "--from", "10", "--to", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1     10-9-8-7-6"), std::string::npos) << r.out;
  r = run({"paths", "--pref", "reliability"});
  EXPECT_NE(r.out.find("1     10-1-3-7-6"), std::string::npos) << r.out;
  EXPECT_EQ(run({"paths", "--to", "0"}).code, 2);
}

TEST(Cli, CheckFifo) {
  CliResult r = run({"check-fifo"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "NON-FIFO\n");
  EXPECT_NE(r.out.find("edge 6: pair (4,5) t4 = 5.76 > delta + t5 = 2.69"), std::string::npos) << r.out;
  const std::string toy = temp_file("toy.json", R"({"time_grid": {"delta": 1, "intervals": 3},
    "nodes": [{"id": 0, "charging": false}, {"id": 1, "charging": false}],
    "edges": [{"id": 1, "u": 0, "v": 1, "energy": 3, "reliability_pct": 100, "times": [2, 2, 2]}]})");
  r = run({"check-fifo", "--network", toy});
  EXPECT_EQ(r.out.substr(0, 5), "FIFO\n");
  EXPECT_EQ(run({"check-fifo", "--network", "/no/such/file.json"}).code, 1);
  EXPECT_EQ(run({"check-fifo", "--resolution", "fine"}).code, 1);
}

TEST(Cli, Verify) {
  CliResult r = run({"verify", "--alg", "wsdot", "--deadline", "16"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("travel time: algorithm 4.06, oracle 4.06"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("within 3 sigma"), std::string::npos);
  r = run({"verify", "--alg", "dot", "--deadline", "16", "--search", "exact"});
  EXPECT_NE(r.out.find("verdict: agree"), std::string::npos) << r.out;
  r = run({"verify", "--alg", "dot", "--deadline", "16"});
  EXPECT_NE(r.out.find("greedy suboptimal (known)"), std::string::npos) << r.out;
  r = run({"verify", "--alg", "fifo", "--network", testing::support_file("greedy_gap.json").string(), "--from", "0",
           "--to", "3"});
  EXPECT_NE(r.out.find("verdict: greedy suboptimal (known)"), std::string::npos) << r.out;
  const CliResult again = run({"verify", "--alg", "fifo", "--network", testing::support_file("greedy_gap.json").string(),
                         "--from", "0", "--to", "3"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, Replan) {
  const std::string noop = temp_file("noop.json", R"([{"at_time": 1.48, "edge_id": 2,
    "new_times": [1.62, 1.82, 1.62, 1.02, 1.02, 1.02, 1.02, 0.82], "vehicle": {"node": 9, "soc": 80}}])");
  CliResult r = run({"replan", noop, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string doc = r.out.substr(r.out.find('{'));
  const Itinerary it = itinerary_from_json(doc);
  EXPECT_EQ(it.nodes(), (std::vector<NodeId>{9, 8, 7, 6}));
  EXPECT_NEAR(it.destination_arrival(), 5.75, 1e-9);

  const std::string inflate = temp_file("inflate.json", R"([{"at_time": 0, "edge_id": 3,
    "new_times": [11.3, 11.3, 11.3, 7.3, 7.3, 7.3, 7.3, 7.3], "vehicle": {"node": 10, "soc": 100}}])");
  r = run({"replan", inflate, "--alg", "dot", "--deadline", "16", "--search", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1-10"), std::string::npos) << r.out;

  const std::string empty = temp_file("empty.json", "[]");
  r = run({"replan", empty});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"replan", temp_file("bad.json", "{\"at_time\": 1}")}).code, 1);
  EXPECT_EQ(run({"replan", temp_file("bad2.json", "[{\"at_time\": 1}]")}).code, 1);
  EXPECT_EQ(run({"replan", "/no/such/scenario.json"}).code, 1);
}

}  // namespace
}  // namespace evroute
