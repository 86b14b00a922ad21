#pragma once

#include <vector>

#include "evroute/routing.hpp"

namespace evroute::detail {

/// A next-hop candidate as seen by the greedy walks.
struct HopScore {
  double duration = 0.0;
  double reliability = 1.0;
  double energy = 0.0;
  double secondary = 0.0;  // extra time key (station proximity for the forward walk)
  NodeId node = 0;
  EdgeId edge = 0;
  std::size_t slot = 0;  // caller's index
};

/// Sorts best-first. Ties end on lowest node id, then lowest edge id.
void order_hops(std::vector<HopScore>& hops, const DriverPreference& pref);

}  // namespace evroute::detail
