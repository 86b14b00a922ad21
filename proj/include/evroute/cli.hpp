#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "evroute/itinerary.hpp"
#include "evroute/network.hpp"

namespace evroute::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kUnreachable = 2,
  kEnergyInfeasible = 3,
  kDeadlineInfeasible = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Row-per-quantity itinerary table. Totals are recomputed from the legs.
void render_table(const Itinerary& it, std::ostream& out);

}  // namespace evroute::cli
