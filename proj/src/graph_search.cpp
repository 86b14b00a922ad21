#include "graph_search.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace evroute::detail {

std::map<NodeId, double> static_costs(const Network& net, NodeId source, const EdgeWeight& weight,
                                      const NodeSet& blocked) {
  std::map<NodeId, double> dist;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, n] = heap.top();
    heap.pop();
    if (d > dist[n]) {
      continue;
    }
    for (EdgeId id : net.incident(n)) {
      const Edge& e = net.edge(id);
      const NodeId m = e.other(n);
      if (blocked.contains(m)) {
        continue;
      }
      const double nd = d + weight(e);
      auto it = dist.find(m);
      if (it == dist.end() || nd < it->second) {
        dist[m] = nd;
        heap.emplace(nd, m);
      }
    }
  }
  return dist;
}

double cost_to_station(const Network& net, const std::map<NodeId, double>& costs) {
  double best = kInf;
  for (const auto& [n, c] : costs) {
    if (net.is_station(n)) {
      best = std::min(best, c);
    }
  }
  return best;
}

double fastest_time(const Edge& e) { return *std::min_element(e.times.begin(), e.times.end()); }

}  // namespace evroute::detail
