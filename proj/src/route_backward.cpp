#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "evroute/errors.hpp"
#include "evroute/routing.hpp"
#include "evroute/time_engine.hpp"
#include "graph_search.hpp"
#include "hop_ranking.hpp"

namespace evroute {

using detail::kEps;
using detail::kInf;
using detail::NodeSet;

std::vector<WaitOption> wait_candidates(const Network& net, EdgeId edge, double leave_at, WaitRule rule,
                                        double max_wait, double earliest_departure) {
  const Edge& e = net.edge(edge);
  const TimeGrid& grid = net.grid();
  const IntervalIndex current = grid.backward_index(leave_at);
  const double current_time = e.time_at(current);

  std::vector<WaitOption> improving;
  for (IntervalIndex k = current - 1; k >= 1; --k) {
    const double arrive = grid.upper_boundary(k);
    const double wait = leave_at - arrive;
    if (wait > max_wait + kEps) {
      break;
    }
    const double duration = e.time_at(k);
    if (duration < current_time && arrive - duration >= earliest_departure - kEps) {
      improving.push_back({wait, arrive, k, duration});
    }
  }

  std::vector<WaitOption> out;
  if (rule == WaitRule::optional || improving.empty()) {
    out.push_back({0.0, leave_at, current, current_time});
  }
  out.insert(out.end(), improving.begin(), improving.end());
  return out;
}

namespace {

/// Backward label: the vehicle must leave `node` at `time` holding at least
/// `level` percent. The step fields describe the edge towards the parent.
struct Label {
  NodeId node = 0;
  double time = 0.0;
  double level = 0.0;
  double travel = 0.0;
  double waited = 0.0;
  int parent = -1;
  std::uint64_t visited = 0;
  EdgeId edge = 0;
  double wait_downstream = 0.0;  // stop at the parent's node
  double arrive = 0.0;           // arrival at the parent's node
  double duration = 0.0;
  IntervalIndex interval = 1;
};

struct ExpandStats {
  bool structural = false;
  bool deadline_blocked = false;
  bool energy_blocked = false;
};

class BackwardSearch {
 public:
  BackwardSearch(const Network& net, const TripRequest& req, double deadline, const BackwardOptions& opts,
                 bool allow_waits)
      : net_(net), req_(req), deadline_(deadline), opts_(opts), allow_waits_(allow_waits) {
    if (req.origin == req.destination) {
      throw std::invalid_argument("origin and destination must differ");
    }
    if (!net.has_node(req.origin) || !net.has_node(req.destination)) {
      throw std::invalid_argument("origin or destination is not a network node");
    }
    if (!(deadline > 0.0)) {
      throw std::invalid_argument("deadline must be positive");
    }
    blocked_.insert(req.avoid.begin(), req.avoid.end());
    blocked_.erase(req.origin);
    blocked_.erase(req.destination);
  }

  Itinerary run() {
    const auto lb = detail::static_costs(net_, req_.origin, detail::fastest_time, blocked_);
    if (!std::isfinite(detail::cost_to(lb, req_.destination))) {
      throw RoutingError(RoutingFailure::unreachable, "destination " + std::to_string(req_.destination) +
                                                          " is unreachable from " + std::to_string(req_.origin));
    }
    if (opts_.strategy == SearchStrategy::greedy) {
      return greedy();
    }
    if (auto best = exact(false)) {
      return *best;
    }
    if (exact(true)) {
      throw RoutingError(RoutingFailure::energy_infeasible,
                         "no feasible solution: every schedule meeting the deadline exhausts the battery");
    }
    throw RoutingError(RoutingFailure::deadline_infeasible,
                       "deadline infeasible: no route leaves the origin at or after " +
                           std::to_string(opts_.earliest_departure));
  }

 private:
  Label root() const {
    Label r;
    r.node = req_.destination;
    r.time = deadline_;
    r.level = req_.battery.reserve;
    return r;
  }

  std::vector<WaitOption> options_at(const Label& at, EdgeId edge) const {
    if (!allow_waits_ || at.node == req_.destination) {
      return wait_candidates(net_, edge, at.time, WaitRule::improving_only, 0.0, opts_.earliest_departure);
    }
    return wait_candidates(net_, edge, at.time, opts_.wait_rule, opts_.max_wait, opts_.earliest_departure);
  }

  /// Child label for predecessor `u` via `edge` and stop `opt`, or nothing
  /// if the deadline or battery rules it out.
  std::optional<Label> step(const Label& at, int at_index, const Edge& edge, NodeId u, const WaitOption& opt,
                            double lower_bound, bool ignore_energy, ExpandStats& stats) const {
    const double depart = opt.arrive - opt.duration;
    if (depart < opts_.earliest_departure - kEps || depart - lower_bound < opts_.earliest_departure - kEps) {
      stats.deadline_blocked = true;
      return std::nullopt;
    }
    const bool charges_here = at.node != req_.destination && net_.is_station(at.node);
    const double arrival_need =
        charges_here ? min_arrival_soc(req_.policy, at.level, opt.wait, req_.battery.reserve) : at.level;
    const double level = arrival_need + edge.energy;
    const double cap = u == req_.origin ? req_.battery.soc : 100.0;
    if (!ignore_energy && level > cap + kEps) {
      stats.energy_blocked = true;
      return std::nullopt;
    }
    Label child;
    child.node = u;
    child.time = depart;
    child.level = level;
    child.travel = at.travel + opt.duration;
    child.waited = at.waited + opt.wait;
    child.parent = at_index;
    child.edge = edge.id;
    child.wait_downstream = opt.wait;
    child.arrive = opt.arrive;
    child.duration = opt.duration;
    child.interval = opt.interval;
    return child;
  }

  Itinerary greedy() const {
    std::vector<Label> chain{root()};
    NodeSet visited = blocked_;
    visited.insert(req_.destination);
    while (chain.back().node != req_.origin) {
      const Label at = chain.back();
      const auto lb = detail::static_costs(net_, req_.origin, detail::fastest_time, visited);
      ExpandStats stats;
      std::vector<Label> best_per_hop;
      std::vector<detail::HopScore> hops;
      for (EdgeId id : net_.incident(at.node)) {
        const Edge& e = net_.edge(id);
        const NodeId u = e.other(at.node);
        if (visited.contains(u) || !std::isfinite(detail::cost_to(lb, u))) {
          continue;
        }
        stats.structural = true;
        std::optional<Label> best;
        for (const WaitOption& opt : options_at(at, id)) {
          auto child = step(at, static_cast<int>(chain.size()) - 1, e, u, opt, detail::cost_to(lb, u), false, stats);
          if (child && (!best || child->duration < best->duration ||
                        (child->duration == best->duration && child->wait_downstream < best->wait_downstream))) {
            best = child;
          }
        }
        if (best) {
          hops.push_back({best->duration, e.reliability, e.energy, best->wait_downstream, u, id, best_per_hop.size()});
          best_per_hop.push_back(*best);
        }
      }
      if (hops.empty()) {
        fail_greedy(at, stats);
      }
      detail::order_hops(hops, req_.preference);
      chain.push_back(best_per_hop[hops.front().slot]);
      visited.insert(chain.back().node);
    }
    std::reverse(chain.begin(), chain.end());
    return assemble(chain);
  }

  [[noreturn]] void fail_greedy(const Label& at, const ExpandStats& stats) const {
    const std::string where = " at node " + std::to_string(at.node);
    if (!stats.structural) {
      throw RoutingError(RoutingFailure::trapped, "every predecessor" + where + " is visited or cut off");
    }
    if (stats.energy_blocked) {
      throw RoutingError(RoutingFailure::energy_infeasible, "no feasible solution: battery exhausted" + where);
    }
    throw RoutingError(RoutingFailure::deadline_infeasible, "deadline infeasible" + where);
  }

  int bit_of(NodeId n) const { return node_bits_.at(n); }

  std::optional<Itinerary> exact(bool ignore_energy) {
    if (net_.nodes().size() > 64) {
      throw std::invalid_argument("exact backward search supports at most 64 nodes");
    }
    node_bits_.clear();
    for (const Node& n : net_.nodes()) {
      node_bits_.emplace(n.id, static_cast<int>(node_bits_.size()));
    }
    std::uint64_t blocked_mask = 0;
    for (NodeId n : blocked_) {
      if (node_bits_.contains(n)) blocked_mask |= std::uint64_t{1} << bit_of(n);
    }
    const auto lb = detail::static_costs(net_, req_.origin, detail::fastest_time, blocked_);
    const bool by_time = !allow_waits_;

    std::vector<Label> labels;
    Label r = root();
    r.visited = blocked_mask | (std::uint64_t{1} << bit_of(r.node));
    labels.push_back(r);

    auto worse = [&](int a, int b) {
      const Label& x = labels[static_cast<std::size_t>(a)];
      const Label& y = labels[static_cast<std::size_t>(b)];
      if (by_time) return x.time < y.time;
      if (x.travel != y.travel) return x.travel > y.travel;
      return x.waited > y.waited;
    };
    std::priority_queue<int, std::vector<int>, decltype(worse)> open(worse);
    open.push(0);

    std::vector<int> complete;
    double incumbent = by_time ? -kInf : kInf;
    auto beaten = [&](const Label& l) {
      return by_time ? l.time < incumbent - kEps : l.travel > incumbent + kEps;
    };

    while (!open.empty()) {
      const int idx = open.top();
      open.pop();
      const Label at = labels[static_cast<std::size_t>(idx)];
      if (beaten(at)) {
        continue;
      }
      if (at.node == req_.origin) {
        complete.push_back(idx);
        incumbent = by_time ? std::max(incumbent, at.time) : std::min(incumbent, at.travel);
        continue;
      }
      if (at.time <= 0.0) {
        continue;
      }
      ExpandStats stats;
      for (EdgeId id : net_.incident(at.node)) {
        const Edge& e = net_.edge(id);
        const NodeId u = e.other(at.node);
        const std::uint64_t bit = std::uint64_t{1} << bit_of(u);
        if ((at.visited & bit) != 0) {
          continue;
        }
        const double bound = detail::cost_to(lb, u);
        if (!std::isfinite(bound)) {
          continue;
        }
        for (const WaitOption& opt : options_at(at, id)) {
          auto child = step(at, idx, e, u, opt, bound, ignore_energy, stats);
          if (!child || beaten(*child)) {
            continue;
          }
          child->visited = at.visited | bit;
          labels.push_back(*child);
          open.push(static_cast<int>(labels.size()) - 1);
        }
      }
    }
    if (complete.empty()) {
      return std::nullopt;
    }

    auto chain_of = [&](int idx) {
      std::vector<Label> chain;
      for (int i = idx; i >= 0; i = labels[static_cast<std::size_t>(i)].parent) {
        chain.push_back(labels[static_cast<std::size_t>(i)]);
      }
      return chain;  // origin first
    };
    auto signature = [&](const std::vector<Label>& chain) {
      std::pair<std::vector<NodeId>, std::vector<EdgeId>> sig;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        sig.first.push_back(chain[i].node);
        if (i + 1 < chain.size()) sig.second.push_back(chain[i].edge);
      }
      return sig;
    };
    int best = complete.front();
    for (int idx : complete) {
      const Label& a = labels[static_cast<std::size_t>(idx)];
      const Label& b = labels[static_cast<std::size_t>(best)];
      bool better = false;
      if (by_time) {
        if (a.time > b.time + kEps) better = true;
        else if (a.time >= b.time - kEps) better = signature(chain_of(idx)) < signature(chain_of(best));
      } else {
        if (a.travel < b.travel - kEps) better = true;
        else if (a.travel <= b.travel + kEps) {
          if (a.waited < b.waited - kEps) better = true;
          else if (a.waited <= b.waited + kEps) better = signature(chain_of(idx)) < signature(chain_of(best));
        }
      }
      if (better) best = idx;
    }
    return assemble(chain_of(best));
  }

  /// `chain` runs from the origin label to the destination root.
  Itinerary assemble(const std::vector<Label>& chain) const {
    Itinerary it;
    it.algorithm = allow_waits_ ? Algorithm::wsdot : Algorithm::dot;
    it.origin = req_.origin;
    it.destination = req_.destination;
    it.start_time = chain.front().time;
    it.initial_soc = req_.battery.soc;
    double soc = req_.battery.soc;
    const double reserve = req_.battery.reserve;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const Label& here = chain[i];
      const Edge& e = net_.edge(here.edge);
      Leg leg;
      leg.edge = here.edge;
      leg.from = here.node;
      leg.to = chain[i + 1].node;
      leg.wait_before = i == 0 ? 0.0 : chain[i - 1].wait_downstream;
      leg.depart = here.time;
      leg.arrive = here.arrive;
      leg.interval = here.interval;
      leg.duration = here.duration;
      leg.energy = e.energy;
      leg.reliability = e.reliability;
      if (i > 0 && net_.is_station(here.node)) {
        BatteryState before{};
        before.soc = soc;
        before.reserve = reserve;
        auto [after, amount] = charge(before, req_.policy, {here.level - reserve, leg.wait_before});
        soc = after.soc;
        leg.charge_amount = amount;
      }
      leg.soc_before = soc;
      soc -= e.energy;
      if (soc < 0.0 && soc > -kEps) soc = 0.0;
      leg.soc_after = soc;
      it.legs.push_back(leg);
    }
    return it;
  }

  const Network& net_;
  const TripRequest& req_;
  double deadline_;
  BackwardOptions opts_;
  bool allow_waits_;
  NodeSet blocked_;
  std::unordered_map<NodeId, int> node_bits_;
};

}  // namespace

Itinerary route_dot(const Network& net, const TripRequest& request, double deadline, const BackwardOptions& options) {
  return BackwardSearch(net, request, deadline, options, false).run();
}

Itinerary route_wsdot(const Network& net, const TripRequest& request, double deadline,
                      const BackwardOptions& options) {
  return BackwardSearch(net, request, deadline, options, true).run();
}

}  // namespace evroute
