#include "evroute/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evroute {

namespace {
// Sums of decimal travel times land a few ulps off interval boundaries.
constexpr double kBoundarySnap = 1e-9;
}  // namespace

TimeGrid::TimeGrid(double delta, int intervals) : delta_(delta), intervals_(intervals) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("time grid delta must be positive");
  }
  if (intervals < 1) {
    throw std::invalid_argument("time grid needs at least one interval");
  }
}

IntervalIndex TimeGrid::forward_index(double depart) const noexcept {
  const double k = std::floor(depart / delta_ + kBoundarySnap) + 1.0;
  return static_cast<IntervalIndex>(std::clamp(k, 1.0, static_cast<double>(intervals_)));
}

IntervalIndex TimeGrid::backward_index(double arrive) const noexcept {
  if (arrive / delta_ <= kBoundarySnap) {
    return 1;
  }
  const double k = std::ceil(arrive / delta_ - kBoundarySnap);
  return static_cast<IntervalIndex>(std::clamp(k, 1.0, static_cast<double>(intervals_)));
}

}  // namespace evroute
