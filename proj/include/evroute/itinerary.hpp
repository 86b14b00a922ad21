#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evroute/network.hpp"
#include "evroute/time_grid.hpp"

namespace evroute {

enum class Algorithm { fifo, dot, wsdot, oracle };

[[nodiscard]] std::string_view to_string(Algorithm alg);
[[nodiscard]] Algorithm algorithm_from_string(std::string_view name);

/// One traversal with the stop that precedes it. The vehicle reaches `from`,
/// waits `wait_before` (charging `charge_amount` if `from` is a station),
/// leaves at `depart` with `soc_before` and reaches `to` at `arrive`.
struct Leg {
  EdgeId edge = 0;
  NodeId from = 0;
  NodeId to = 0;
  double wait_before = 0.0;
  double depart = 0.0;
  double arrive = 0.0;
  IntervalIndex interval = 1;
  double duration = 0.0;
  double energy = 0.0;
  double reliability = 1.0;
  double soc_before = 0.0;
  double soc_after = 0.0;
  double charge_amount = 0.0;

  bool operator==(const Leg&) const = default;
};

/// Aggregates are recomputed from the legs on every call.
struct Itinerary {
  Algorithm algorithm = Algorithm::fifo;
  NodeId origin = 0;
  NodeId destination = 0;
  double start_time = 0.0;  // clock at the origin when no legs exist
  double initial_soc = 100.0;
  std::vector<Leg> legs;

  [[nodiscard]] double origin_departure() const;
  [[nodiscard]] double destination_arrival() const;
  [[nodiscard]] double travel_time() const;
  [[nodiscard]] double total_wait() const;
  [[nodiscard]] double elapsed() const;
  [[nodiscard]] double reliability() const;
  [[nodiscard]] double final_soc() const;
  [[nodiscard]] double total_charge() const;
  [[nodiscard]] std::vector<NodeId> nodes() const;
  [[nodiscard]] PathSelection path() const;

  bool operator==(const Itinerary&) const = default;
};

/// Machine-readable form; includes every leg and every aggregate.
[[nodiscard]] std::string itinerary_to_json(const Itinerary& it, int indent = 2);
/// Rebuilds an itinerary from itinerary_to_json output. Aggregates in the
/// document are checked against the legs.
[[nodiscard]] Itinerary itinerary_from_json(std::string_view text);

}  // namespace evroute
