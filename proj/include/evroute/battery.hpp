#pragma once

#include <utility>

#include "evroute/network.hpp"

namespace evroute {

/// Remaining charge in percent of a homogeneous capacity.
struct BatteryState {
  double soc = 100.0;
  double reserve = 0.0;  // floor the planner must not cross

  BatteryState() = default;
  BatteryState(double soc_pct, double reserve_pct = 0.0);

  bool operator==(const BatteryState&) const = default;
};

struct ChargingPolicy {
  enum class Kind {
    minimal_need,      // top up just enough for the stated remaining need
    duration_limited,  // gain `rate` percent per time unit of waiting
    fixed_target,      // top up to `target` percent
  };

  Kind kind = Kind::minimal_need;
  double rate = 0.0;
  double target = 100.0;

  static ChargingPolicy minimal() { return {}; }
  static ChargingPolicy duration(double rate_per_unit);
  static ChargingPolicy fixed(double target_pct);

  bool operator==(const ChargingPolicy&) const = default;
};

struct ChargeContext {
  double remaining_need = 0.0;  // energy to cover before the next charge, excluding reserve
  double wait = 0.0;            // time spent at the station
};

struct EnergyCheck {
  bool feasible = true;
  /// True when the walk cannot be driven on the starting charge alone.
  bool needs_charging = false;
  /// Charge on arrival assuming no top-ups (meaningful when !needs_charging).
  double final_soc = 0.0;
};

/// Segment-wise check of the energy budget: the walk is cut at intermediate
/// charging stations; the first segment must fit in `soc - reserve`, later
/// segments in `100 - reserve`. For a walk without stations this reduces to
/// `sum of energies <= soc - reserve`.
[[nodiscard]] EnergyCheck energy_feasible(const PathSelection& path, const Network& net, const BatteryState& battery);

/// Drains the edge energy. Throws StrandedError if the charge would go negative.
[[nodiscard]] BatteryState apply_traversal(const BatteryState& battery, EdgeId edge, const Network& net);

/// Returns the new state and the amount added (never negative).
[[nodiscard]] std::pair<BatteryState, double> charge(const BatteryState& battery, const ChargingPolicy& policy,
                                                     const ChargeContext& context);

/// Smallest arrival charge at a station from which `policy` reaches
/// `required_departure` after waiting `wait`. Used by the backward searches.
[[nodiscard]] double min_arrival_soc(const ChargingPolicy& policy, double required_departure, double wait,
                                     double reserve);

}  // namespace evroute
