#include <gtest/gtest.h>

#include "evroute/routing.hpp"
#include "test_support.hpp"

namespace evroute {
namespace {

using testing::subgraph;

TEST(EnumeratePaths, CaseStudyHasTwoRoutes) {
  const auto paths = enumerate_paths(subgraph(), 10, 6);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].edge_ids(), (std::vector<EdgeId>{5, 6, 7, 4}));
  EXPECT_EQ(paths[1].edge_ids(), (std::vector<EdgeId>{1, 2, 3, 4}));
}

TEST(EnumeratePaths, RemovingEdgeFourIsolatesTheDestination) {
  const std::vector<EdgeId> keep{1, 2, 3, 5, 6, 7};
  EXPECT_TRUE(enumerate_paths(subgraph().with_edges_only(keep), 10, 6).empty());
}

TEST(EnumeratePaths, AdjacentPairIncludesSingleEdge) {
  const auto paths = enumerate_paths(subgraph(), 7, 6);
  ASSERT_FALSE(paths.empty());
  bool single = false;
  for (const auto& p : paths) single = single || p.edge_ids() == std::vector<EdgeId>{4};
  EXPECT_TRUE(single);
}

TEST(PathMetrics, TableTwoTotals) {
  const std::vector<EdgeId> ids{1, 2, 3, 4};
  const RouteMetrics m = path_metrics(subgraph().path_from_edges(10, ids), subgraph(), 0.0, BatteryState(100, 0));
  EXPECT_NEAR(m.travel_time, 5.75, 1e-9);
  EXPECT_DOUBLE_EQ(m.energy, 77.0);
  EXPECT_NEAR(m.reliability, 0.8806, 0.0005);
  EXPECT_TRUE(m.energy_feasible);
}

TEST(PathMetrics, AlternativeRoute) {
  const std::vector<EdgeId> ids{5, 6, 7, 4};
  const RouteMetrics m = path_metrics(subgraph().path_from_edges(10, ids), subgraph(), 0.0, BatteryState(100, 0));
  EXPECT_NEAR(m.travel_time, 1.68 + 1.14 + 2.18 + 1.52, 1e-9);
  EXPECT_DOUBLE_EQ(m.energy, 90.0);
  EXPECT_NEAR(m.reliability, 0.9129, 0.0005);
}

TEST(PathMetrics, EmptyPath) {
  const RouteMetrics m = path_metrics(PathSelection{10, {}}, subgraph(), 3.0, BatteryState(100, 0));
  EXPECT_DOUBLE_EQ(m.travel_time, 0.0);
  EXPECT_DOUBLE_EQ(m.energy, 0.0);
  EXPECT_DOUBLE_EQ(m.reliability, 1.0);
}

std::vector<RouteMetrics> case_study_metrics() {
  std::vector<RouteMetrics> out;
  for (const auto& p : enumerate_paths(subgraph(), 10, 6)) out.push_back(path_metrics(p, subgraph(), 0.0, BatteryState()));
  return out;
}

TEST(RankRoutes, TimeFirst) {
  const auto ranked = rank_routes(case_study_metrics(), DriverPreference::time_first());
  EXPECT_EQ(ranked.front().path.edge_ids(), (std::vector<EdgeId>{1, 2, 3, 4}));
}

TEST(RankRoutes, ReliabilityFirst) {
  const auto ranked = rank_routes(case_study_metrics(), DriverPreference::reliability_first());
  EXPECT_EQ(ranked.front().path.edge_ids(), (std::vector<EdgeId>{5, 6, 7, 4}));
}

TEST(RankRoutes, WeightedAndEdgeCases) {
  // energy-weighted ranks the cheaper 77% route first
  const auto ranked = rank_routes(case_study_metrics(), DriverPreference::weighted(0, 0, 1));
  EXPECT_EQ(ranked.front().path.edge_ids(), (std::vector<EdgeId>{1, 2, 3, 4}));
  auto one = case_study_metrics();
  one.resize(1);
  EXPECT_EQ(rank_routes(one, DriverPreference::time_first()).size(), 1u);
  EXPECT_THROW((void)rank_routes({}, DriverPreference::time_first()), std::invalid_argument);
  EXPECT_THROW((void)DriverPreference::weighted(0, 0, 0), std::invalid_argument);
  EXPECT_THROW((void)DriverPreference::weighted(-1, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace evroute
