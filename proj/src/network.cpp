#include "evroute/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "evroute/errors.hpp"

namespace evroute {

std::vector<NodeId> PathSelection::nodes() const {
  std::vector<NodeId> out;
  out.reserve(steps.size() + 1);
  out.push_back(origin);
  for (const auto& s : steps) {
    out.push_back(s.to);
  }
  return out;
}

std::vector<EdgeId> PathSelection::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) {
    out.push_back(s.edge);
  }
  return out;
}

Network::Network(TimeGrid grid, std::vector<Node> nodes, std::vector<Edge> edges)
    : grid_(grid), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_index_.emplace(nodes_[i].id, i).second) {
      throw ParseError("duplicate node id " + std::to_string(nodes_[i].id));
    }
    adjacency_[nodes_[i].id];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string tag = "edge " + std::to_string(e.id);
    if (!edge_index_.emplace(e.id, i).second) {
      throw ParseError("duplicate edge id " + std::to_string(e.id));
    }
    if (!has_node(e.u) || !has_node(e.v)) {
      throw ParseError(tag + ": endpoint not in node set");
    }
    if (e.u == e.v) {
      throw ParseError(tag + ": self loop");
    }
    if (static_cast<int>(e.times.size()) != grid_.intervals()) {
      throw ParseError(tag + ": times length mismatch (expected " + std::to_string(grid_.intervals()) +
                       ", got " + std::to_string(e.times.size()) + ")");
    }
    for (double t : e.times) {
      if (!(t > 0.0) || !std::isfinite(t)) {
        throw ParseError(tag + ": nonpositive time");
      }
    }
    if (!(e.reliability > 0.0 && e.reliability <= 1.0)) {
      throw ParseError(tag + ": reliability outside (0, 100]");
    }
    if (!(e.energy >= 0.0) || !std::isfinite(e.energy)) {
      throw ParseError(tag + ": negative energy");
    }
    adjacency_[e.u].push_back(e.id);
    adjacency_[e.v].push_back(e.id);
  }
}

bool Network::is_station(NodeId n) const {
  auto it = node_index_.find(n);
  return it != node_index_.end() && nodes_[it->second].charging;
}

const Edge& Network::edge(EdgeId e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) {
    throw std::out_of_range("unknown edge id " + std::to_string(e));
  }
  return edges_[it->second];
}

std::span<const EdgeId> Network::incident(NodeId n) const {
  auto it = adjacency_.find(n);
  if (it == adjacency_.end()) {
    throw std::out_of_range("unknown node id " + std::to_string(n));
  }
  return it->second;
}

PathSelection Network::path_through(std::span<const NodeId> sequence) const {
  if (sequence.empty()) {
    throw std::invalid_argument("empty node sequence");
  }
  PathSelection path{sequence.front(), {}};
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    const NodeId from = sequence[i - 1];
    const NodeId to = sequence[i];
    std::optional<EdgeId> hop;
    for (EdgeId id : incident(from)) {
      if (edge(id).other(from) == to) {
        hop = id;
        break;
      }
    }
    if (!hop) {
      throw std::invalid_argument("no edge between " + std::to_string(from) + " and " + std::to_string(to));
    }
    path.steps.push_back({*hop, from, to});
  }
  return path;
}

PathSelection Network::path_from_edges(NodeId origin, std::span<const EdgeId> edge_ids) const {
  PathSelection path{origin, {}};
  NodeId at = origin;
  for (EdgeId id : edge_ids) {
    const Edge& e = edge(id);
    if (!e.touches(at)) {
      throw std::invalid_argument("edge " + std::to_string(id) + " does not continue the walk at node " +
                                  std::to_string(at));
    }
    path.steps.push_back({id, at, e.other(at)});
    at = e.other(at);
  }
  return path;
}

Network Network::with_edges_only(std::span<const EdgeId> keep) const {
  std::set<EdgeId> wanted(keep.begin(), keep.end());
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (wanted.erase(e.id) > 0) {
      kept.push_back(e);
    }
  }
  if (!wanted.empty()) {
    throw std::out_of_range("unknown edge id " + std::to_string(*wanted.begin()));
  }
  return Network(grid_, nodes_, std::move(kept));
}

Network Network::with_edge_times(EdgeId e, std::vector<double> times) const {
  std::vector<Edge> copy = edges_;
  auto it = std::find_if(copy.begin(), copy.end(), [e](const Edge& x) { return x.id == e; });
  if (it == copy.end()) {
    throw std::out_of_range("unknown edge id " + std::to_string(e));
  }
  it->times = std::move(times);
  return Network(grid_, nodes_, std::move(copy));
}

TopologyReport validate_topology(const Network& net, NodeId origin, NodeId dest) {
  TopologyReport report;
  std::map<NodeId, int> component_of;
  for (const Node& start : net.nodes()) {
    if (component_of.contains(start.id)) {
      continue;
    }
    const int label = static_cast<int>(report.components.size());
    std::vector<NodeId> members;
    std::queue<NodeId> frontier;
    frontier.push(start.id);
    component_of[start.id] = label;
    while (!frontier.empty()) {
      const NodeId n = frontier.front();
      frontier.pop();
      members.push_back(n);
      for (EdgeId id : net.incident(n)) {
        const NodeId m = net.edge(id).other(n);
        if (component_of.emplace(m, label).second) {
          frontier.push(m);
        }
      }
    }
    std::sort(members.begin(), members.end());
    report.components.push_back(std::move(members));
  }
  if (origin == dest) {
    report.reachable = true;
  } else {
    auto a = component_of.find(origin);
    auto b = component_of.find(dest);
    report.reachable = a != component_of.end() && b != component_of.end() && a->second == b->second;
  }
  return report;
}

}  // namespace evroute
