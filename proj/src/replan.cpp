#include <algorithm>
#include <stdexcept>

#include "evroute/routing.hpp"

namespace evroute {

Itinerary replan(const Network& net, NodeId position, double now, const BatteryState& battery,
                 const ReplanRequest& request) {
  if (!net.has_node(position)) {
    throw std::invalid_argument("vehicle position is not a network node");
  }
  if (position == request.destination) {
    Itinerary done;
    done.algorithm = request.algorithm;
    done.origin = position;
    done.destination = position;
    done.start_time = now;
    done.initial_soc = battery.soc;
    return done;
  }

  TripRequest trip;
  trip.origin = position;
  trip.destination = request.destination;
  trip.battery = battery;
  trip.policy = request.policy;
  trip.preference = request.preference;
  trip.avoid = request.history;

  BackwardOptions options = request.options;
  options.earliest_departure = std::max(options.earliest_departure, now);

  switch (request.algorithm) {
    case Algorithm::fifo:
      return route_fifo(net, trip, now);
    case Algorithm::dot:
      return route_dot(net, trip, request.deadline, options);
    case Algorithm::wsdot:
      return route_wsdot(net, trip, request.deadline, options);
    case Algorithm::oracle:
      break;
  }
  throw std::invalid_argument("replanning supports fifo, dot and wsdot");
}

}  // namespace evroute
