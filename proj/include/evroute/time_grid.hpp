#pragma once

#include <cstddef>

namespace evroute {

/// 1-based interval index into an edge's travel-time table.
using IntervalIndex = int;

/// Piecewise-constant time discretisation shared by every edge.
///
/// Forward lookups map a departure time to the interval it falls in
/// (`floor(t / delta) + 1`, so a boundary belongs to the later interval).
/// Backward lookups map an arrival time with `ceil(a / delta)`, so a boundary
/// belongs to the earlier interval. Both clamp to `[1, K]`.
class TimeGrid {
 public:
  TimeGrid(double delta, int intervals);

  [[nodiscard]] double delta() const noexcept { return delta_; }
  [[nodiscard]] int intervals() const noexcept { return intervals_; }
  [[nodiscard]] double horizon() const noexcept { return delta_ * intervals_; }

  [[nodiscard]] IntervalIndex forward_index(double depart) const noexcept;
  [[nodiscard]] IntervalIndex backward_index(double arrive) const noexcept;

  /// Latest instant that still maps to interval `k` under backward lookup.
  [[nodiscard]] double upper_boundary(IntervalIndex k) const noexcept { return delta_ * k; }

  bool operator==(const TimeGrid&) const = default;

 private:
  double delta_;
  int intervals_;
};

}  // namespace evroute
