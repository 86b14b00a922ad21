#pragma once

#include <limits>
#include <vector>

#include "evroute/battery.hpp"
#include "evroute/itinerary.hpp"
#include "evroute/network.hpp"

namespace evroute {

/// How a driver trades travel time, reliability and energy when routes or
/// next hops are ranked.
struct DriverPreference {
  enum class Ordering { time_first, reliability_first, weighted };

  Ordering ordering = Ordering::time_first;
  double w_time = 1.0;
  double w_reliability = 0.0;
  double w_energy = 0.0;

  static DriverPreference time_first() { return {}; }
  static DriverPreference reliability_first() { return {Ordering::reliability_first, 0.0, 1.0, 0.0}; }
  /// Throws std::invalid_argument for negative or all-zero weights.
  static DriverPreference weighted(double w_time, double w_reliability, double w_energy);
};

struct RouteMetrics {
  PathSelection path;
  double travel_time = 0.0;
  double arrival = 0.0;
  double energy = 0.0;
  double reliability = 1.0;
  bool energy_feasible = true;
};

/// Every simple path, ordered by node sequence then edge ids.
[[nodiscard]] std::vector<PathSelection> enumerate_paths(const Network& net, NodeId origin, NodeId dest);

/// Travel time by chained departure-indexed quotes, summed energy and
/// multiplied reliability.
[[nodiscard]] RouteMetrics path_metrics(const PathSelection& path, const Network& net, double depart,
                                        const BatteryState& battery);

/// Throws std::invalid_argument on an empty list.
[[nodiscard]] std::vector<RouteMetrics> rank_routes(std::vector<RouteMetrics> metrics, const DriverPreference& pref);

struct TripRequest {
  NodeId origin = 0;
  NodeId destination = 0;
  BatteryState battery;
  ChargingPolicy policy;
  DriverPreference preference;
  /// Nodes the vehicle must not pass through (e.g. already driven).
  std::vector<NodeId> avoid;
};

/// Greedy forward walk that never waits. At each node the unvisited
/// neighbours are quoted at the current clock, filtered by whether the
/// remaining charge after the move still reaches a station or the
/// destination, ranked, and the best one is taken. Stations top up per the
/// request's policy.
[[nodiscard]] Itinerary route_fifo(const Network& net, const TripRequest& request, double depart);

enum class SearchStrategy {
  /// Walk back from the destination choosing the best predecessor at each node.
  greedy,
  /// Label-correcting search over every simple path and wait choice.
  exact,
};

enum class WaitRule {
  /// Stop whenever an allowed wait shortens the next leg.
  improving_only,
  /// Stopping is a choice: not waiting is always a candidate.
  optional,
};

struct BackwardOptions {
  SearchStrategy strategy = SearchStrategy::greedy;
  WaitRule wait_rule = WaitRule::improving_only;
  double max_wait = std::numeric_limits<double>::infinity();
  double earliest_departure = 0.0;
};

/// Latest-departure routing that must reach the destination exactly at
/// `deadline`. Travel times are indexed by arrival interval. Exact search
/// maximises the origin departure.
[[nodiscard]] Itinerary route_dot(const Network& net, const TripRequest& request, double deadline,
                                  const BackwardOptions& options = {});

/// DOT with deliberate stops. A stop at node v lasts until the arrival at v
/// falls on the end of an earlier interval in which the incoming edge is
/// strictly faster. Exact search minimises pure travel time, then total wait.
[[nodiscard]] Itinerary route_wsdot(const Network& net, const TripRequest& request, double deadline,
                                    const BackwardOptions& options = {});

/// A stop candidate at the downstream end of an edge.
struct WaitOption {
  double wait = 0.0;
  double arrive = 0.0;
  IntervalIndex interval = 1;
  double duration = 0.0;
};

/// Stops the waited search considers before leaving node v at `leave_at`
/// when the incoming edge is `edge`.
[[nodiscard]] std::vector<WaitOption> wait_candidates(const Network& net, EdgeId edge, double leave_at,
                                                      WaitRule rule, double max_wait, double earliest_departure);

struct ReplanRequest {
  Algorithm algorithm = Algorithm::fifo;
  NodeId destination = 0;
  ChargingPolicy policy;
  DriverPreference preference;
  double deadline = 0.0;  // dot / wsdot only
  BackwardOptions options;
  std::vector<NodeId> history;  // nodes already driven, excluding the current one
};

/// Re-runs the chosen algorithm from the vehicle's current position. The
/// updated network carries the new edge times.
[[nodiscard]] Itinerary replan(const Network& net, NodeId position, double now, const BatteryState& battery,
                               const ReplanRequest& request);

}  // namespace evroute
