#include <gtest/gtest.h>

#include <algorithm>

#include "evroute/oracle.hpp"
#include "evroute/routing.hpp"
#include "test_support.hpp"

namespace evroute {
namespace {

using testing::audit;
using testing::subgraph;

const ChargingPolicy kMinimal = ChargingPolicy::minimal();

TEST(ForwardOracle, TableTwoArrival) {
  const OracleResult r = brute_force_forward(subgraph(), 10, 6, 0.0, BatteryState(), kMinimal);
  ASSERT_TRUE(r.best);
  EXPECT_NEAR(r.objective, 5.75, 1e-9);
  EXPECT_EQ(r.best->path().edge_ids(), (std::vector<EdgeId>{1, 2, 3, 4}));
  EXPECT_EQ(r.candidates, 2u);
  EXPECT_EQ(audit(*r.best, subgraph(), 0, false), "");
}

TEST(ForwardOracle, NoChargeNoRoute) {
  EXPECT_FALSE(brute_force_forward(subgraph(), 10, 6, 0.0, BatteryState(10, 0), kMinimal).best);
}

TEST(ForwardOracle, LaterDepartureMatchesEnumeratedMetrics) {
  double best = 1e18;
  for (const auto& p : enumerate_paths(subgraph(), 10, 6)) {
    best = std::min(best, path_metrics(p, subgraph(), 8.0, BatteryState()).arrival);
  }
  const OracleResult r = brute_force_forward(subgraph(), 10, 6, 8.0, BatteryState(), kMinimal);
  ASSERT_TRUE(r.best);
  EXPECT_DOUBLE_EQ(r.objective, best);
}

TEST(WaitedOracle, TableFourWithBoundaryWaits) {
  const OracleResult r = brute_force_waited(subgraph(), 10, 6, 16.0, BatteryState(), kMinimal, WaitGrid::boundaries());
  ASSERT_TRUE(r.best);
  EXPECT_NEAR(r.objective, 4.06, 1e-9);
  EXPECT_EQ(r.best->nodes(), (std::vector<NodeId>{10, 1, 3, 7, 6}));
  std::vector<double> waits;
  for (const Leg& l : r.best->legs) waits.push_back(l.wait_before);
  ASSERT_EQ(waits.size(), 4u);
  EXPECT_DOUBLE_EQ(waits[0], 0.0);
  EXPECT_DOUBLE_EQ(waits[1], 0.0);
  EXPECT_NEAR(waits[2], 1.31, 1e-9);
  EXPECT_NEAR(waits[3], 2.80, 1e-9);
  EXPECT_DOUBLE_EQ(r.best->destination_arrival(), 16.0);
  EXPECT_EQ(audit(*r.best, subgraph(), 0, true), "");
}

TEST(WaitedOracle, EmptyWaitSet) {
  // 1.28 + 0.34 + 0.78 + 1.20 via 10-1-3-7-6, reading each edge by its arrival interval
  const OracleResult none = brute_force_waited(subgraph(), 10, 6, 16.0, BatteryState(), kMinimal, WaitGrid::no_waits());
  ASSERT_TRUE(none.best);
  EXPECT_NEAR(none.objective, 3.60, 1e-9);
  EXPECT_EQ(none.best->nodes(), (std::vector<NodeId>{10, 1, 3, 7, 6}));
  const OracleResult zero =
      brute_force_waited(subgraph(), 10, 6, 16.0, BatteryState(), kMinimal, WaitGrid::explicit_grid({0.0}));
  ASSERT_TRUE(zero.best);
  EXPECT_EQ(*zero.best, *none.best);
  const OracleResult optional =
      brute_force_waited(subgraph(), 10, 6, 16.0, BatteryState(), kMinimal, WaitGrid::boundaries(true));
  ASSERT_TRUE(optional.best);
  EXPECT_DOUBLE_EQ(optional.objective, none.objective);
}

TEST(WaitedOracle, ExplicitGridStillArrivesOnTime) {
  const OracleResult r =
      brute_force_waited(subgraph(), 10, 6, 16.0, BatteryState(), kMinimal, WaitGrid::explicit_grid({0.0, 0.5, 1.0}));
  ASSERT_TRUE(r.best);
  EXPECT_LE(r.objective, 3.60 + 1e-9);
  EXPECT_DOUBLE_EQ(r.best->destination_arrival(), 16.0);
  EXPECT_EQ(audit(*r.best, subgraph(), 0, true), "");
}

TEST(WaitedOracle, UnreachableHasNoCandidates) {
  const OracleResult r = brute_force_waited(subgraph(), 10, 0, 16.0, BatteryState(), kMinimal, WaitGrid::boundaries());
  EXPECT_FALSE(r.best);
  EXPECT_EQ(r.candidates, 0u);
  EXPECT_EQ(brute_force_forward(subgraph(), 10, 0, 0.0, BatteryState(), kMinimal).candidates, 0u);
}

TEST(WaitedOracle, RefusesLargeNetworks) {
  std::vector<Node> nodes;
  for (int i = 0; i < static_cast<int>(kOracleMaxNodes) + 1; ++i) nodes.push_back({i, false});
  const Network big(TimeGrid(1.0, 1), nodes, {{1, 0, 1, 1, 1.0, {1.0}, false}});
  EXPECT_THROW((void)brute_force_forward(big, 0, 1, 0.0, BatteryState(), kMinimal), std::invalid_argument);
}

TEST(MonteCarlo, TableTwoItinerary) {
  TripRequest req;
  req.origin = 10;
  req.destination = 6;
  const Itinerary it = route_fifo(subgraph(), req, 0.0);
  const ReliabilityEstimate e = monte_carlo_reliability(it, subgraph(), 100000, 7);
  EXPECT_EQ(e.samples, 100000u);
  EXPECT_NEAR(e.analytic, it.reliability(), 1e-15);
  EXPECT_GT(e.standard_error, 0.0);
  EXPECT_LE(std::abs(e.estimate - 0.8806), 3 * e.standard_error + 0.0005);
}

TEST(MonteCarlo, PerfectLegIsExact) {
  const Network net(TimeGrid(1.0, 1), {{0, false}, {1, false}}, {{1, 0, 1, 1, 1.0, {1.0}, false}});
  TripRequest req;
  req.origin = 0;
  req.destination = 1;
  const Itinerary it = route_fifo(net, req, 0.0);
  const ReliabilityEstimate e = monte_carlo_reliability(it, net, 5000, 1);
  EXPECT_DOUBLE_EQ(e.estimate, 1.0);
  EXPECT_DOUBLE_EQ(e.standard_error, 0.0);
}

TEST(MonteCarlo, ReproducibleAndPartitioned) {
  TripRequest req;
  req.origin = 10;
  req.destination = 6;
  const Itinerary it = route_wsdot(subgraph(), req, 16.0);
  const auto a = monte_carlo_reliability(it, subgraph(), 20000, 99, 4);
  const auto b = monte_carlo_reliability(it, subgraph(), 20000, 99, 4);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.samples, 20000u);
  const auto c = monte_carlo_reliability(it, subgraph(), 20000, 100, 4);
  EXPECT_NE(a.estimate, c.estimate);
  EXPECT_THROW((void)monte_carlo_reliability(it, subgraph(), 0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace evroute
