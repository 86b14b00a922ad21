#include <gtest/gtest.h>

#include <algorithm>

#include "evroute/errors.hpp"
#include "evroute/oracle.hpp"
#include "evroute/routing.hpp"
#include "test_support.hpp"

namespace evroute {
namespace {

using testing::subgraph;

ReplanRequest request(Algorithm alg) {
  ReplanRequest r;
  r.algorithm = alg;
  r.destination = 6;
  r.history = {10};
  return r;
}

TEST(Replan, UnchangedNetworkKeepsTheSuffix) {
  const Itinerary it = replan(subgraph(), 9, 1.48, BatteryState(80, 0), request(Algorithm::fifo));
  EXPECT_EQ(it.nodes(), (std::vector<NodeId>{9, 8, 7, 6}));
  EXPECT_NEAR(it.destination_arrival(), 5.75, 1e-9);
  EXPECT_DOUBLE_EQ(it.final_soc(), 23.0);
}

TEST(Replan, InflatedEdgeThreeHasNoDetourFromNineSoItIsKept) {
  std::vector<double> slow;
  for (double t : subgraph().edge(3).times) slow.push_back(10 * t);
  const Network changed = subgraph().with_edge_times(3, slow);
  const Itinerary it = replan(changed, 9, 1.48, BatteryState(80, 0), request(Algorithm::fifo));
  EXPECT_EQ(it.path().edge_ids(), (std::vector<EdgeId>{2, 3, 4}));
  // the oracle on the network without node 10's edges agrees nothing better exists
  const std::vector<EdgeId> keep{2, 3, 4, 6, 7};
  const OracleResult o = brute_force_forward(changed.with_edges_only(keep), 9, 6, 1.48, BatteryState(80, 0),
                                             ChargingPolicy::minimal());
  ASSERT_TRUE(o.best);
  EXPECT_DOUBLE_EQ(o.objective, it.destination_arrival());
}

TEST(Replan, InflatedEdgeThreeFromTheOriginReroutesUnderExactDot) {
  std::vector<double> slow;
  for (double t : subgraph().edge(3).times) slow.push_back(10 * t);
  const Network changed = subgraph().with_edge_times(3, slow);
  ReplanRequest r = request(Algorithm::dot);
  r.history.clear();
  r.deadline = 16.0;
  r.options.strategy = SearchStrategy::exact;
  const Itinerary it = replan(changed, 10, 0.0, BatteryState(), r);
  const OracleResult o = brute_force_waited(changed, 10, 6, 16.0, BatteryState(), ChargingPolicy::minimal(),
                                            WaitGrid::no_waits());
  ASSERT_TRUE(o.best);
  EXPECT_EQ(it.nodes(), o.best->nodes());
  const auto used = it.path().edge_ids();
  EXPECT_EQ(std::find(used.begin(), used.end(), 3), used.end());
}

TEST(Replan, BackwardAlgorithmsRespectTheClock) {
  ReplanRequest r = request(Algorithm::wsdot);
  r.history.clear();
  r.deadline = 16.0;
  r.options.strategy = SearchStrategy::exact;
  const Itinerary it = replan(subgraph(), 10, 9.0, BatteryState(), r);
  EXPECT_GE(it.origin_departure(), 9.0 - 1e-9);
  EXPECT_DOUBLE_EQ(it.destination_arrival(), 16.0);
  r.deadline = 10.0;
  EXPECT_THROW((void)replan(subgraph(), 10, 9.0, BatteryState(), r), RoutingError);
}

TEST(Replan, AtDestinationReturnsEmptyItinerary) {
  const Itinerary it = replan(subgraph(), 6, 4.0, BatteryState(30, 0), request(Algorithm::fifo));
  EXPECT_TRUE(it.legs.empty());
  EXPECT_DOUBLE_EQ(it.destination_arrival(), 4.0);
}

}  // namespace
}  // namespace evroute
