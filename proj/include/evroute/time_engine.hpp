#pragma once

#include <map>
#include <vector>

#include "evroute/network.hpp"

namespace evroute {

/// Cost of one traversal. `arrive - depart == duration` always holds.
struct TraversalQuote {
  EdgeId edge = 0;
  IntervalIndex interval = 1;
  double duration = 0.0;
  double depart = 0.0;
  double arrive = 0.0;
};

/// Duration looked up by the departure interval.
[[nodiscard]] TraversalQuote forward_quote(const Network& net, EdgeId edge, double depart);

/// Duration looked up by the arrival interval. The returned `depart` may be
/// negative; callers treat that as "before the horizon starts".
[[nodiscard]] TraversalQuote backward_quote(const Network& net, EdgeId edge, double arrive);

/// How finely departures are compared when testing first-in-first-out order.
enum class FifoResolution {
  /// Departures one interval apart, both at interval starts:
  /// violation when `times[k] > delta + times[k+1]`.
  interval,
  /// Departures just before and at the boundary:
  /// violation when `times[k] > times[k+1]`.
  boundary,
};

struct FifoViolation {
  IntervalIndex earlier = 0;  // k
  IntervalIndex later = 0;    // k + 1
  double earlier_arrival = 0.0;
  double later_arrival = 0.0;
};

[[nodiscard]] std::vector<FifoViolation> check_fifo(const Network& net, EdgeId edge,
                                                    FifoResolution resolution = FifoResolution::interval);

struct FifoReport {
  bool fifo = true;
  std::map<EdgeId, std::vector<FifoViolation>> violations;  // every edge, possibly empty
};

[[nodiscard]] FifoReport network_is_fifo(const Network& net, FifoResolution resolution = FifoResolution::interval);

}  // namespace evroute
