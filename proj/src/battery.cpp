#include "evroute/battery.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "evroute/errors.hpp"

namespace evroute {

BatteryState::BatteryState(double soc_pct, double reserve_pct) : soc(soc_pct), reserve(reserve_pct) {
  if (!(reserve >= 0.0 && reserve <= soc && soc <= 100.0)) {
    throw std::invalid_argument("battery state requires 0 <= reserve <= soc <= 100");
  }
}

ChargingPolicy ChargingPolicy::duration(double rate_per_unit) {
  if (!(rate_per_unit > 0.0)) {
    throw std::invalid_argument("charging rate must be positive");
  }
  return {Kind::duration_limited, rate_per_unit, 100.0};
}

ChargingPolicy ChargingPolicy::fixed(double target_pct) {
  if (!(target_pct >= 0.0 && target_pct <= 100.0)) {
    throw std::invalid_argument("charging target must lie in [0, 100]");
  }
  return {Kind::fixed_target, 0.0, target_pct};
}

EnergyCheck energy_feasible(const PathSelection& path, const Network& net, const BatteryState& battery) {
  EnergyCheck out;
  double total = 0.0;
  double segment = 0.0;
  double budget = battery.soc - battery.reserve;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const double use = net.edge(path.steps[i].edge).energy;
    total += use;
    segment += use;
    if (segment > budget) {
      out.feasible = false;
    }
    const NodeId reached = path.steps[i].to;
    if (i + 1 < path.steps.size() && net.is_station(reached)) {
      segment = 0.0;
      budget = 100.0 - battery.reserve;
    }
  }
  out.needs_charging = total > battery.soc - battery.reserve;
  out.final_soc = battery.soc - total;
  return out;
}

BatteryState apply_traversal(const BatteryState& battery, EdgeId edge, const Network& net) {
  const double use = net.edge(edge).energy;
  if (battery.soc - use < 0.0) {
    throw StrandedError("battery depleted on edge " + std::to_string(edge) + " (soc " +
                        std::to_string(battery.soc) + ", needs " + std::to_string(use) + ")");
  }
  BatteryState next = battery;
  next.soc -= use;
  return next;
}

std::pair<BatteryState, double> charge(const BatteryState& battery, const ChargingPolicy& policy,
                                       const ChargeContext& context) {
  double soc = battery.soc;
  switch (policy.kind) {
    case ChargingPolicy::Kind::minimal_need:
      soc = std::max(soc, std::min(100.0, context.remaining_need + battery.reserve));
      break;
    case ChargingPolicy::Kind::duration_limited:
      soc = std::max(soc, std::min(100.0, soc + policy.rate * context.wait));
      break;
    case ChargingPolicy::Kind::fixed_target:
      soc = std::max(soc, policy.target);
      break;
  }
  BatteryState next = battery;
  next.soc = soc;
  return {next, soc - battery.soc};
}

double min_arrival_soc(const ChargingPolicy& policy, double required_departure, double wait, double reserve) {
  switch (policy.kind) {
    case ChargingPolicy::Kind::minimal_need:
      return required_departure <= 100.0 ? reserve : required_departure;
    case ChargingPolicy::Kind::duration_limited:
      return std::max(reserve, required_departure - policy.rate * wait);
    case ChargingPolicy::Kind::fixed_target:
      return policy.target >= required_departure ? reserve : required_departure;
  }
  return required_departure;
}

}  // namespace evroute
