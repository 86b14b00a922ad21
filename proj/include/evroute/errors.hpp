#pragma once

#include <stdexcept>
#include <string>

namespace evroute {

/// Malformed network, scenario or itinerary input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Battery would be depleted in the middle of an arc.
class StrandedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RoutingFailure {
  unreachable,
  energy_infeasible,
  deadline_infeasible,
  trapped,
};

class RoutingError : public std::runtime_error {
 public:
  RoutingError(RoutingFailure kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] RoutingFailure kind() const noexcept { return kind_; }

 private:
  RoutingFailure kind_;
};

}  // namespace evroute
