#include <gtest/gtest.h>

#include "evroute/network_io.hpp"
#include "evroute/time_engine.hpp"
#include "test_support.hpp"

namespace evroute {
namespace {

using testing::subgraph;

TEST(ForwardQuote, CaseStudyLegs) {
  auto q = forward_quote(subgraph(), 1, 0.0);
  EXPECT_EQ(q.interval, 1);
  EXPECT_DOUBLE_EQ(q.duration, 1.48);
  q = forward_quote(subgraph(), 3, 3.10);
  EXPECT_EQ(q.interval, 2);
  EXPECT_DOUBLE_EQ(q.duration, 1.13);
  q = forward_quote(subgraph(), 1, 1000.0);
  EXPECT_EQ(q.interval, 8);
  EXPECT_DOUBLE_EQ(q.duration, 1.08);
  EXPECT_NEAR(q.arrive - q.depart, q.duration, 1e-12);
}

TEST(ForwardQuote, Errors) {
  EXPECT_THROW((void)forward_quote(subgraph(), 1, -0.5), std::invalid_argument);
  EXPECT_THROW((void)forward_quote(subgraph(), 42, 0.0), std::out_of_range);
}

TEST(BackwardQuote, CaseStudyLegs) {
  auto q = backward_quote(subgraph(), 4, 16.0);
  EXPECT_EQ(q.interval, 8);
  EXPECT_DOUBLE_EQ(q.duration, 1.20);
  EXPECT_NEAR(q.depart, 14.8, 1e-12);
  q = backward_quote(subgraph(), 2, 14.07);
  EXPECT_EQ(q.interval, 8);
  EXPECT_DOUBLE_EQ(q.duration, 0.82);
  EXPECT_NEAR(q.depart, 13.25, 1e-12);
  q = backward_quote(subgraph(), 1, 13.25);
  EXPECT_EQ(q.interval, 7);
  EXPECT_DOUBLE_EQ(q.duration, 1.34);
  EXPECT_NEAR(q.depart, 11.91, 1e-12);
  q = backward_quote(subgraph(), 7, 12.0);
  EXPECT_EQ(q.interval, 6);
  EXPECT_DOUBLE_EQ(q.duration, 0.69);
}

TEST(BackwardQuote, Errors) {
  EXPECT_THROW((void)backward_quote(subgraph(), 1, 0.0), std::invalid_argument);
  EXPECT_THROW((void)backward_quote(subgraph(), 42, 5.0), std::out_of_range);
}

TEST(Fifo, Edge6OvertakesAcrossBoundary) {
  const auto v = check_fifo(subgraph(), 6);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].earlier, 4);
  EXPECT_EQ(v[0].later, 5);
  EXPECT_GT(v[0].earlier_arrival, v[0].later_arrival);
  // just either side of t = 8
  EXPECT_NEAR(forward_quote(subgraph(), 6, 7.99).arrive, 13.75, 1e-12);
  EXPECT_NEAR(forward_quote(subgraph(), 6, 8.01).arrive, 8.70, 1e-12);
}

TEST(Fifo, Edge1Pair12IsNotAViolation) {
  for (const auto& v : check_fifo(subgraph(), 1)) EXPECT_FALSE(v.earlier == 1 && v.later == 2);
  for (const auto& v : check_fifo(subgraph(), 1, FifoResolution::boundary)) EXPECT_FALSE(v.earlier == 1);
}

TEST(Fifo, BoundaryResolutionIsStricter) {
  const auto v = check_fifo(subgraph(), 3, FifoResolution::boundary);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].earlier, 3);
  EXPECT_TRUE(check_fifo(subgraph(), 3).empty());
}

TEST(Fifo, ConstantTimesAreFifo) {
  const Network net(TimeGrid(2.0, 4), {{0, false}, {1, false}}, {{1, 0, 1, 5.0, 0.99, {3.0, 3.0, 3.0, 3.0}, false}});
  EXPECT_TRUE(check_fifo(net, 1).empty());
  EXPECT_TRUE(check_fifo(net, 1, FifoResolution::boundary).empty());
  EXPECT_TRUE(network_is_fifo(net).fifo);
}

TEST(Fifo, CaseStudyNetworkIsNotFifo) {
  const FifoReport r = network_is_fifo(subgraph());
  EXPECT_FALSE(r.fifo);
  EXPECT_EQ(r.violations.size(), 7u);
  for (const auto& [id, list] : r.violations) EXPECT_EQ(list.empty(), id != 6) << "edge " << id;
}

TEST(Fifo, FirstFourEdgesReportEveryEdge) {
  const std::vector<EdgeId> keep{1, 2, 3, 4};
  const Network net = subgraph().with_edges_only(keep);
  const FifoReport r = network_is_fifo(net);
  EXPECT_TRUE(r.fifo);
  EXPECT_EQ(r.violations.size(), 4u);
  const FifoReport strict = network_is_fifo(net, FifoResolution::boundary);
  EXPECT_FALSE(strict.fifo);
  EXPECT_EQ(strict.violations.at(1).size(), 3u);
  EXPECT_EQ(strict.violations.at(2).size(), 3u);
  EXPECT_EQ(strict.violations.at(3).size(), 1u);
  EXPECT_EQ(strict.violations.at(4).size(), 2u);
}

}  // namespace
}  // namespace evroute
