#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "evroute/routing.hpp"
#include "evroute/time_engine.hpp"
#include "graph_search.hpp"
#include "hop_ranking.hpp"

namespace evroute {

DriverPreference DriverPreference::weighted(double w_time, double w_reliability, double w_energy) {
  if (w_time < 0.0 || w_reliability < 0.0 || w_energy < 0.0) {
    throw std::invalid_argument("preference weights must be nonnegative");
  }
  if (w_time + w_reliability + w_energy <= 0.0) {
    throw std::invalid_argument("preference weights must not all be zero");
  }
  return {Ordering::weighted, w_time, w_reliability, w_energy};
}

std::vector<PathSelection> enumerate_paths(const Network& net, NodeId origin, NodeId dest) {
  std::vector<PathSelection> out;
  if (!net.has_node(origin) || !net.has_node(dest)) {
    return out;
  }
  PathSelection current{origin, {}};
  detail::NodeSet on_path{origin};
  std::function<void(NodeId)> extend = [&](NodeId at) {
    if (at == dest) {
      out.push_back(current);
      return;
    }
    for (EdgeId id : net.incident(at)) {
      const NodeId next = net.edge(id).other(at);
      if (on_path.contains(next)) {
        continue;
      }
      on_path.insert(next);
      current.steps.push_back({id, at, next});
      extend(next);
      current.steps.pop_back();
      on_path.erase(next);
    }
  };
  if (origin != dest) {
    extend(origin);
  }
  std::sort(out.begin(), out.end(), [](const PathSelection& a, const PathSelection& b) {
    return std::make_pair(a.nodes(), a.edge_ids()) < std::make_pair(b.nodes(), b.edge_ids());
  });
  return out;
}

RouteMetrics path_metrics(const PathSelection& path, const Network& net, double depart,
                          const BatteryState& battery) {
  RouteMetrics m;
  m.path = path;
  double clock = depart;
  for (const Step& s : path.steps) {
    const TraversalQuote q = forward_quote(net, s.edge, clock);
    clock = q.arrive;
    m.travel_time += q.duration;
    const Edge& e = net.edge(s.edge);
    m.energy += e.energy;
    m.reliability *= e.reliability;
  }
  m.arrival = clock;
  m.energy_feasible = energy_feasible(path, net, battery).feasible;
  return m;
}

std::vector<RouteMetrics> rank_routes(std::vector<RouteMetrics> metrics, const DriverPreference& pref) {
  if (metrics.empty()) {
    throw std::invalid_argument("no routes to rank");
  }
  double max_time = 0.0;
  double max_energy = 0.0;
  for (const auto& m : metrics) {
    max_time = std::max(max_time, m.travel_time);
    max_energy = std::max(max_energy, m.energy);
  }
  auto norm = [](double v, double hi) { return hi > 0.0 ? v / hi : 0.0; };
  auto score = [&](const RouteMetrics& m) {
    return pref.w_time * norm(m.travel_time, max_time) - pref.w_reliability * m.reliability +
           pref.w_energy * norm(m.energy, max_energy);
  };
  auto key = [&](const RouteMetrics& m) {
    switch (pref.ordering) {
      case DriverPreference::Ordering::time_first:
        return std::make_tuple(m.travel_time, -m.reliability, m.energy);
      case DriverPreference::Ordering::reliability_first:
        return std::make_tuple(-m.reliability, m.travel_time, m.energy);
      case DriverPreference::Ordering::weighted:
        break;
    }
    return std::make_tuple(score(m), m.travel_time, m.energy);
  };
  std::stable_sort(metrics.begin(), metrics.end(), [&](const RouteMetrics& a, const RouteMetrics& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) {
      return ka < kb;
    }
    return a.path.nodes() < b.path.nodes();
  });
  return metrics;
}

namespace detail {

void order_hops(std::vector<HopScore>& hops, const DriverPreference& pref) {
  double max_time = 0.0;
  double max_energy = 0.0;
  for (const auto& h : hops) {
    max_time = std::max(max_time, h.duration);
    max_energy = std::max(max_energy, h.energy);
  }
  auto norm = [](double v, double hi) { return hi > 0.0 ? v / hi : 0.0; };
  auto key = [&](const HopScore& h) {
    switch (pref.ordering) {
      case DriverPreference::Ordering::time_first:
        return std::make_tuple(h.duration, h.secondary, -h.reliability);
      case DriverPreference::Ordering::reliability_first:
        return std::make_tuple(-h.reliability, h.duration, h.secondary);
      case DriverPreference::Ordering::weighted:
        break;
    }
    const double s = pref.w_time * norm(h.duration, max_time) - pref.w_reliability * h.reliability +
                     pref.w_energy * norm(h.energy, max_energy);
    return std::make_tuple(s, h.duration, h.secondary);
  };
  std::sort(hops.begin(), hops.end(), [&](const HopScore& a, const HopScore& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) {
      return ka < kb;
    }
    return std::tie(a.node, a.edge) < std::tie(b.node, b.edge);
  });
}

}  // namespace detail
}  // namespace evroute
