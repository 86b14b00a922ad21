#include "evroute/time_engine.hpp"

#include <stdexcept>

namespace evroute {

TraversalQuote forward_quote(const Network& net, EdgeId edge, double depart) {
  if (depart < 0.0) {
    throw std::invalid_argument("departure time must be nonnegative");
  }
  const Edge& e = net.edge(edge);
  TraversalQuote q;
  q.edge = edge;
  q.interval = net.grid().forward_index(depart);
  q.duration = e.time_at(q.interval);
  q.depart = depart;
  q.arrive = depart + q.duration;
  return q;
}

TraversalQuote backward_quote(const Network& net, EdgeId edge, double arrive) {
  if (!(arrive > 0.0)) {
    throw std::invalid_argument("arrival time must be positive");
  }
  const Edge& e = net.edge(edge);
  TraversalQuote q;
  q.edge = edge;
  q.interval = net.grid().backward_index(arrive);
  q.duration = e.time_at(q.interval);
  q.arrive = arrive;
  q.depart = arrive - q.duration;
  return q;
}

std::vector<FifoViolation> check_fifo(const Network& net, EdgeId edge, FifoResolution resolution) {
  const Edge& e = net.edge(edge);
  const double delta = net.grid().delta();
  std::vector<FifoViolation> out;
  for (IntervalIndex k = 1; k < net.grid().intervals(); ++k) {
    const double boundary = delta * k;
    // Departure compared against the one at the start of interval k + 1.
    const double early_depart = resolution == FifoResolution::interval ? boundary - delta : boundary;
    const double earlier_arrival = early_depart + e.time_at(k);
    const double later_arrival = boundary + e.time_at(k + 1);
    if (earlier_arrival > later_arrival) {
      out.push_back({k, k + 1, earlier_arrival, later_arrival});
    }
  }
  return out;
}

FifoReport network_is_fifo(const Network& net, FifoResolution resolution) {
  FifoReport report;
  for (const Edge& e : net.edges()) {
    auto v = check_fifo(net, e.id, resolution);
    if (!v.empty()) {
      report.fifo = false;
    }
    report.violations.emplace(e.id, std::move(v));
  }
  return report;
}

}  // namespace evroute
