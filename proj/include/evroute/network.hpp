#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "evroute/time_grid.hpp"

namespace evroute {

using NodeId = int;
using EdgeId = int;

struct Node {
  NodeId id = 0;
  bool charging = false;

  bool operator==(const Node&) const = default;
};

/// Undirected road segment. Both directions share energy, reliability and
/// the per-interval travel-time table.
struct Edge {
  EdgeId id = 0;
  NodeId u = 0;
  NodeId v = 0;
  double energy = 0.0;       // percent of a full battery
  double reliability = 1.0;  // probability of an incident-free traversal
  std::vector<double> times;  // times[k - 1] is the duration in interval k
  bool unverified = false;    // endpoints not recoverable from the source data

  [[nodiscard]] bool touches(NodeId n) const noexcept { return u == n || v == n; }
  [[nodiscard]] NodeId other(NodeId n) const noexcept { return n == u ? v : u; }
  [[nodiscard]] double time_at(IntervalIndex k) const { return times.at(static_cast<std::size_t>(k - 1)); }

  bool operator==(const Edge&) const = default;
};

/// One traversal of an edge in a given direction.
struct Step {
  EdgeId edge = 0;
  NodeId from = 0;
  NodeId to = 0;

  bool operator==(const Step&) const = default;
};

/// A walk through the network: the `y_ij = 1` arcs of the energy constraint.
struct PathSelection {
  NodeId origin = 0;
  std::vector<Step> steps;

  [[nodiscard]] bool empty() const noexcept { return steps.empty(); }
  [[nodiscard]] NodeId destination() const noexcept { return steps.empty() ? origin : steps.back().to; }
  [[nodiscard]] std::vector<NodeId> nodes() const;
  [[nodiscard]] std::vector<EdgeId> edge_ids() const;

  bool operator==(const PathSelection&) const = default;
};

/// Immutable time-dependent stochastic road network.
class Network {
 public:
  /// Validates every invariant; throws ParseError on violation.
  Network(TimeGrid grid, std::vector<Node> nodes, std::vector<Edge> edges);

  [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] std::span<const Node> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  [[nodiscard]] bool has_node(NodeId n) const noexcept { return node_index_.contains(n); }
  [[nodiscard]] bool has_edge(EdgeId e) const noexcept { return edge_index_.contains(e); }
  [[nodiscard]] bool is_station(NodeId n) const;

  /// Throws std::out_of_range for unknown ids.
  [[nodiscard]] const Edge& edge(EdgeId e) const;

  /// Edges incident to `n`, ordered by edge id.
  [[nodiscard]] std::span<const EdgeId> incident(NodeId n) const;

  /// Walk built from a node sequence, picking the lowest-id edge per hop.
  [[nodiscard]] PathSelection path_through(std::span<const NodeId> sequence) const;
  /// Walk built from an origin and a list of edge ids.
  [[nodiscard]] PathSelection path_from_edges(NodeId origin, std::span<const EdgeId> edge_ids) const;

  /// Network restricted to the listed edges. All nodes are kept.
  [[nodiscard]] Network with_edges_only(std::span<const EdgeId> keep) const;
  /// Copy with one edge's travel-time table replaced.
  [[nodiscard]] Network with_edge_times(EdgeId e, std::vector<double> times) const;

  bool operator==(const Network& other) const {
    return grid_ == other.grid_ && nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  TimeGrid grid_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<NodeId, std::size_t> node_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::unordered_map<NodeId, std::vector<EdgeId>> adjacency_;
};

struct TopologyReport {
  bool reachable = false;
  std::vector<std::vector<NodeId>> components;  // each sorted, ordered by smallest member
};

/// Reachability ignoring time and energy, plus connected components.
[[nodiscard]] TopologyReport validate_topology(const Network& net, NodeId origin, NodeId dest);

}  // namespace evroute
