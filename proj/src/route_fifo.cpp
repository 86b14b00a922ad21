#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "evroute/errors.hpp"
#include "evroute/routing.hpp"
#include "evroute/time_engine.hpp"
#include "graph_search.hpp"
#include "hop_ranking.hpp"

namespace evroute {

using detail::kEps;
using detail::kInf;
using detail::NodeSet;

namespace {

double by_energy(const Edge& e) { return e.energy; }

struct Candidate {
  EdgeId edge = 0;
  NodeId next = 0;
  TraversalQuote quote;
};

}  // namespace

Itinerary route_fifo(const Network& net, const TripRequest& request, double depart) {
  const NodeId origin = request.origin;
  const NodeId dest = request.destination;
  if (origin == dest) {
    throw std::invalid_argument("origin and destination must differ");
  }
  if (depart < 0.0) {
    throw std::invalid_argument("departure time must be nonnegative");
  }
  if (!net.has_node(origin) || !net.has_node(dest)) {
    throw std::invalid_argument("origin or destination is not a network node");
  }
  const double reserve = request.battery.reserve;

  NodeSet visited(request.avoid.begin(), request.avoid.end());
  visited.insert(origin);
  if (!std::isfinite(detail::cost_to(detail::static_costs(net, origin, by_energy, visited), dest))) {
    throw RoutingError(RoutingFailure::unreachable,
                       "destination " + std::to_string(dest) + " is unreachable from " + std::to_string(origin));
  }

  Itinerary it;
  it.algorithm = Algorithm::fifo;
  it.origin = origin;
  it.destination = dest;
  it.start_time = depart;
  it.initial_soc = request.battery.soc;

  NodeId at = origin;
  double clock = depart;
  BatteryState battery = request.battery;
  double pending_charge = 0.0;

  while (at != dest) {
    const int frozen = net.grid().forward_index(clock);
    auto frozen_time = [frozen](const Edge& e) { return e.time_at(frozen); };

    std::vector<Candidate> candidates;
    std::vector<detail::HopScore> hops;
    bool any_structural = false;
    for (EdgeId id : net.incident(at)) {
      const Edge& e = net.edge(id);
      const NodeId next = e.other(at);
      if (visited.contains(next)) {
        continue;
      }
      const auto energy_from_next = detail::static_costs(net, next, by_energy, visited);
      if (!std::isfinite(detail::cost_to(energy_from_next, dest))) {
        continue;  // dead end once the visited set is excluded
      }
      any_structural = true;

      const double soc_after = battery.soc - e.energy;
      double need = 0.0;
      if (next != dest && !net.is_station(next)) {
        need = std::min(detail::cost_to(energy_from_next, dest), detail::cost_to_station(net, energy_from_next));
      }
      if (soc_after - reserve < need - kEps) {
        continue;  // would stop somewhere in the middle of an arc
      }

      double proximity = 0.0;
      if (!net.is_station(next)) {
        proximity = detail::cost_to_station(net, detail::static_costs(net, next, frozen_time, visited));
      }
      const TraversalQuote q = forward_quote(net, id, clock);
      hops.push_back({q.duration, e.reliability, e.energy, proximity, next, id, candidates.size()});
      candidates.push_back({id, next, q});
    }

    if (hops.empty()) {
      if (!any_structural) {
        throw RoutingError(RoutingFailure::trapped, "every neighbour of node " + std::to_string(at) +
                                                        " is visited or a dead end");
      }
      throw RoutingError(RoutingFailure::energy_infeasible,
                         "no feasible solution: charge at node " + std::to_string(at) +
                             " cannot reach a charging station or the destination");
    }

    detail::order_hops(hops, request.preference);
    const Candidate& pick = candidates[hops.front().slot];
    const Edge& e = net.edge(pick.edge);

    Leg leg;
    leg.edge = pick.edge;
    leg.from = at;
    leg.to = pick.next;
    leg.depart = clock;
    leg.arrive = pick.quote.arrive;
    leg.interval = pick.quote.interval;
    leg.duration = pick.quote.duration;
    leg.energy = e.energy;
    leg.reliability = e.reliability;
    leg.charge_amount = pending_charge;
    leg.soc_before = battery.soc;
    battery = apply_traversal(battery, pick.edge, net);
    leg.soc_after = battery.soc;
    it.legs.push_back(leg);

    visited.insert(pick.next);
    at = pick.next;
    clock = pick.quote.arrive;
    pending_charge = 0.0;

    if (at != dest && net.is_station(at)) {
      NodeSet ahead = visited;
      ahead.erase(at);
      const double need = detail::cost_to(detail::static_costs(net, at, by_energy, ahead), dest);
      auto [charged, amount] = charge(battery, request.policy, {std::isfinite(need) ? need : 100.0, 0.0});
      battery = charged;
      pending_charge = amount;
    }
  }
  return it;
}

}  // namespace evroute
