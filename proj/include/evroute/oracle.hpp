#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "evroute/battery.hpp"
#include "evroute/itinerary.hpp"
#include "evroute/network.hpp"

namespace evroute {

/// Exhaustive reference solvers. They enumerate every simple path on their
/// own and share nothing with the routing searches beyond the network and
/// battery types.
inline constexpr std::size_t kOracleMaxNodes = 12;

struct OracleResult {
  std::optional<Itinerary> best;
  double objective = 0.0;  // arrival time (forward) or pure travel time (waited)
  std::size_t candidates = 0;
};

/// Earliest feasible arrival over all simple paths, no waiting.
[[nodiscard]] OracleResult brute_force_forward(const Network& net, NodeId origin, NodeId dest, double depart,
                                               const BatteryState& battery, const ChargingPolicy& policy);

/// Which stops the waited oracle tries at every intermediate node.
struct WaitGrid {
  enum class Kind {
    none,      // never stop
    boundary,  // stop until the end of an earlier, strictly faster interval
    explicit_durations,
  };
  Kind kind = Kind::none;
  bool keep_zero = false;  // boundary only: also try not stopping when a faster interval exists
  double max_wait = std::numeric_limits<double>::infinity();
  std::vector<double> durations;  // explicit_durations only

  static WaitGrid no_waits() { return {}; }
  static WaitGrid boundaries(bool keep_zero = false,
                             double max_wait = std::numeric_limits<double>::infinity()) {
    return {Kind::boundary, keep_zero, max_wait, {}};
  }
  static WaitGrid explicit_grid(std::vector<double> durations) {
    return {Kind::explicit_durations, false, std::numeric_limits<double>::infinity(), std::move(durations)};
  }
};

/// Minimal pure travel time reaching `dest` exactly at `deadline` and
/// leaving the origin no earlier than `earliest_departure`. Ties go to the
/// smaller total wait, then the lexicographically smaller route.
[[nodiscard]] OracleResult brute_force_waited(const Network& net, NodeId origin, NodeId dest, double deadline,
                                              const BatteryState& battery, const ChargingPolicy& policy,
                                              const WaitGrid& grid, double earliest_departure = 0.0);

struct ReliabilityEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
  double analytic = 1.0;  // product of leg reliabilities
};

/// Samples an independent incident on every leg. Bitwise reproducible for a
/// given (seed, samples, partitions); partitions run on their own threads.
[[nodiscard]] ReliabilityEstimate monte_carlo_reliability(const Itinerary& itinerary, const Network& net,
                                                          std::size_t samples, std::uint64_t seed,
                                                          unsigned partitions = 1);

}  // namespace evroute
