#include "evroute/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace evroute {

namespace {

constexpr double kTol = 1e-9;

struct Hop {
  EdgeId edge;
  NodeId from;
  NodeId to;
};
using Route = std::vector<Hop>;

void guard_size(const Network& net) {
  if (net.nodes().size() > kOracleMaxNodes) {
    throw std::invalid_argument("oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes");
  }
}

// Iterative depth-first enumeration of simple routes.
std::vector<Route> all_routes(const Network& net, NodeId origin, NodeId dest) {
  std::vector<Route> out;
  if (origin == dest || !net.has_node(origin) || !net.has_node(dest)) {
    return out;
  }
  struct Frame {
    NodeId node;
    std::size_t next_edge;
  };
  std::vector<Frame> stack{{origin, 0}};
  std::vector<NodeId> on_path{origin};
  Route route;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto incident = net.incident(top.node);
    if (top.next_edge >= incident.size()) {
      stack.pop_back();
      on_path.pop_back();
      if (!route.empty()) route.pop_back();
      continue;
    }
    const Edge& e = net.edge(incident[top.next_edge++]);
    const NodeId to = e.other(top.node);
    if (std::find(on_path.begin(), on_path.end(), to) != on_path.end()) {
      continue;
    }
    const NodeId from = top.node;
    if (to == dest) {
      route.push_back({e.id, from, to});
      out.push_back(route);
      route.pop_back();
      continue;
    }
    route.push_back({e.id, from, to});
    on_path.push_back(to);
    stack.push_back({to, 0});
  }
  return out;
}

std::vector<NodeId> route_nodes(NodeId origin, const Route& r) {
  std::vector<NodeId> n{origin};
  for (const Hop& h : r) n.push_back(h.to);
  return n;
}

std::vector<EdgeId> route_edges(const Route& r) {
  std::vector<EdgeId> e;
  for (const Hop& h : r) e.push_back(h.edge);
  return e;
}

bool lex_less(NodeId origin, const Route& a, const Route& b) {
  return std::make_pair(route_nodes(origin, a), route_edges(a)) <
         std::make_pair(route_nodes(origin, b), route_edges(b));
}

struct Timing {
  double depart;
  double arrive;
  double duration;
  IntervalIndex interval;
  double wait_before;
};

// Replays the battery forward. Empty result means the vehicle strands.
std::optional<std::vector<Leg>> drive(const Network& net, const Route& route, const std::vector<Timing>& timing,
                                      const BatteryState& battery, const ChargingPolicy& policy) {
  std::vector<Leg> legs;
  double soc = battery.soc;
  for (std::size_t i = 0; i < route.size(); ++i) {
    const Edge& e = net.edge(route[i].edge);
    Leg leg;
    leg.edge = e.id;
    leg.from = route[i].from;
    leg.to = route[i].to;
    leg.wait_before = timing[i].wait_before;
    leg.depart = timing[i].depart;
    leg.arrive = timing[i].arrive;
    leg.duration = timing[i].duration;
    leg.interval = timing[i].interval;
    leg.energy = e.energy;
    leg.reliability = e.reliability;
    if (i > 0 && net.is_station(leg.from)) {
      double segment = 0.0;
      for (std::size_t j = i; j < route.size(); ++j) {
        segment += net.edge(route[j].edge).energy;
        if (j + 1 < route.size() && net.is_station(route[j].to)) break;
      }
      BatteryState here;
      here.soc = soc;
      here.reserve = battery.reserve;
      auto [after, amount] = charge(here, policy, {segment, leg.wait_before});
      soc = after.soc;
      leg.charge_amount = amount;
    }
    leg.soc_before = soc;
    soc -= e.energy;
    if (soc < battery.reserve - kTol) {
      return std::nullopt;
    }
    if (soc < 0.0) soc = 0.0;
    leg.soc_after = soc;
    legs.push_back(leg);
  }
  return legs;
}

std::vector<double> stop_choices(const Network& net, const Edge& edge, double leave_at, const WaitGrid& grid,
                                 double earliest) {
  const TimeGrid& tg = net.grid();
  switch (grid.kind) {
    case WaitGrid::Kind::none:
      return {0.0};
    case WaitGrid::Kind::explicit_durations: {
      std::vector<double> out;
      for (double w : grid.durations) {
        if (w >= 0.0 && leave_at - w > 0.0) out.push_back(w);
      }
      if (std::find(out.begin(), out.end(), 0.0) == out.end()) out.insert(out.begin(), 0.0);
      return out;
    }
    case WaitGrid::Kind::boundary:
      break;
  }
  const int here = tg.backward_index(leave_at);
  const double here_time = edge.times[static_cast<std::size_t>(here - 1)];
  std::vector<double> faster;
  for (int k = 1; k < here; ++k) {
    const double boundary = tg.delta() * k;
    const double wait = leave_at - boundary;
    const double t = edge.times[static_cast<std::size_t>(k - 1)];
    if (wait <= grid.max_wait + kTol && t < here_time && boundary - t >= earliest - kTol) {
      faster.push_back(wait);
    }
  }
  if (faster.empty() || grid.keep_zero) faster.push_back(0.0);
  std::sort(faster.begin(), faster.end());
  return faster;
}

}  // namespace

OracleResult brute_force_forward(const Network& net, NodeId origin, NodeId dest, double depart,
                                 const BatteryState& battery, const ChargingPolicy& policy) {
  guard_size(net);
  OracleResult result;
  std::optional<Route> best_route;
  std::vector<Leg> best_legs;
  for (const Route& route : all_routes(net, origin, dest)) {
    ++result.candidates;
    std::vector<Timing> timing;
    double clock = depart;
    for (const Hop& h : route) {
      const Edge& e = net.edge(h.edge);
      const int k = net.grid().forward_index(clock);
      const double d = e.times[static_cast<std::size_t>(k - 1)];
      timing.push_back({clock, clock + d, d, k, 0.0});
      clock += d;
    }
    auto legs = drive(net, route, timing, battery, policy);
    if (!legs) continue;
    const bool better = !best_route || clock < result.objective - kTol ||
                        (clock <= result.objective + kTol && lex_less(origin, route, *best_route));
    if (better) {
      best_route = route;
      best_legs = std::move(*legs);
      result.objective = clock;
    }
  }
  if (best_route) {
    Itinerary it;
    it.algorithm = Algorithm::oracle;
    it.origin = origin;
    it.destination = dest;
    it.start_time = depart;
    it.initial_soc = battery.soc;
    it.legs = std::move(best_legs);
    result.best = std::move(it);
  }
  return result;
}

OracleResult brute_force_waited(const Network& net, NodeId origin, NodeId dest, double deadline,
                                const BatteryState& battery, const ChargingPolicy& policy, const WaitGrid& grid,
                                double earliest_departure) {
  guard_size(net);
  OracleResult result;
  struct Best {
    Route route;
    std::vector<Leg> legs;
    double travel;
    double waited;
  };
  std::optional<Best> best;

  for (const Route& route : all_routes(net, origin, dest)) {
    // timing[i] describes route[i]; filled from the destination backwards.
    std::vector<Timing> timing(route.size());
    std::vector<double> stop_at(route.size() + 1, 0.0);  // stop_at[i]: wait at route node i

    auto descend = [&](auto&& self, std::size_t i, double leave_at, double travel, double waited) -> void {
      // i: index of the hop whose downstream node we leave at `leave_at`.
      const Hop& hop = route[i];
      const Edge& e = net.edge(hop.edge);
      const bool at_destination = i + 1 == route.size();
      const std::vector<double> choices =
          at_destination ? std::vector<double>{0.0} : stop_choices(net, e, leave_at, grid, earliest_departure);
      for (double w : choices) {
        const double arrive = w == 0.0 ? leave_at : (grid.kind == WaitGrid::Kind::boundary
                                                         ? net.grid().delta() * std::round((leave_at - w) / net.grid().delta())
                                                         : leave_at - w);
        if (arrive <= 0.0) continue;
        const int k = net.grid().backward_index(arrive);
        const double d = e.times[static_cast<std::size_t>(k - 1)];
        const double depart = arrive - d;
        if (depart < earliest_departure - kTol) continue;
        timing[i] = {depart, arrive, d, k, 0.0};
        stop_at[i + 1] = w;
        const double t = travel + d;
        const double wt = waited + w;
        if (i == 0) {
          ++result.candidates;
          std::vector<Timing> forward = timing;
          for (std::size_t j = 0; j < route.size(); ++j) forward[j].wait_before = j == 0 ? 0.0 : stop_at[j];
          auto legs = drive(net, route, forward, battery, policy);
          if (!legs) continue;
          bool better = !best;
          if (best) {
            if (t < best->travel - kTol) better = true;
            else if (t <= best->travel + kTol) {
              if (wt < best->waited - kTol) better = true;
              else if (wt <= best->waited + kTol) better = lex_less(origin, route, best->route);
            }
          }
          if (better) best = Best{route, std::move(*legs), t, wt};
        } else {
          self(self, i - 1, depart, t, wt);
        }
      }
    };
    if (!route.empty()) {
      descend(descend, route.size() - 1, deadline, 0.0, 0.0);
    }
  }

  if (best) {
    Itinerary it;
    it.algorithm = Algorithm::oracle;
    it.origin = origin;
    it.destination = dest;
    it.initial_soc = battery.soc;
    it.legs = std::move(best->legs);
    it.start_time = it.legs.front().depart;
    result.objective = best->travel;
    result.best = std::move(it);
  }
  return result;
}

ReliabilityEstimate monte_carlo_reliability(const Itinerary& itinerary, const Network& net, std::size_t samples,
                                            std::uint64_t seed, unsigned partitions) {
  if (samples < 1) {
    throw std::invalid_argument("monte carlo needs at least one sample");
  }
  partitions = std::max(1u, partitions);
  std::vector<double> leg_reliability;
  ReliabilityEstimate out;
  for (const Leg& l : itinerary.legs) {
    leg_reliability.push_back(net.edge(l.edge).reliability);
    out.analytic *= leg_reliability.back();
  }

  std::vector<std::size_t> successes(partitions, 0);
  auto work = [&](unsigned p) {
    const std::size_t share = samples / partitions + (p < samples % partitions ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), p};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t ok = 0;
    for (std::size_t s = 0; s < share; ++s) {
      bool survived = true;
      for (double r : leg_reliability) {
        // draw every leg so the stream layout does not depend on outcomes
        if (unit(rng) >= r) survived = false;
      }
      ok += survived ? 1 : 0;
    }
    successes[p] = ok;
  };
  std::vector<std::thread> workers;
  for (unsigned p = 1; p < partitions; ++p) workers.emplace_back(work, p);
  work(0);
  for (auto& w : workers) w.join();

  std::size_t total = 0;
  for (std::size_t s : successes) total += s;
  out.samples = samples;
  out.estimate = static_cast<double>(total) / static_cast<double>(samples);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace evroute
