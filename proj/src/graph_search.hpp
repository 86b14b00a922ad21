#pragma once

#include <functional>
#include <limits>
#include <map>
#include <set>

#include "evroute/network.hpp"

namespace evroute::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEps = 1e-9;

using NodeSet = std::set<NodeId>;
using EdgeWeight = std::function<double(const Edge&)>;

/// Single-source Dijkstra over static weights; `blocked` nodes are never
/// entered (the source is allowed even if blocked).
[[nodiscard]] std::map<NodeId, double> static_costs(const Network& net, NodeId source, const EdgeWeight& weight,
                                                    const NodeSet& blocked);

[[nodiscard]] inline double cost_to(const std::map<NodeId, double>& costs, NodeId n) {
  auto it = costs.find(n);
  return it == costs.end() ? kInf : it->second;
}

/// Cheapest cost from the map to any charging station.
[[nodiscard]] double cost_to_station(const Network& net, const std::map<NodeId, double>& costs);

/// Smallest travel time the edge takes in any interval.
[[nodiscard]] double fastest_time(const Edge& e);

}  // namespace evroute::detail
