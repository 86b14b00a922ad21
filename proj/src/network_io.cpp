#include "evroute/network_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "evroute/errors.hpp"

#ifndef EVROUTE_FIXTURE_PATH
#define EVROUTE_FIXTURE_PATH "fixtures/central-arkansas.json"
#endif

namespace evroute {

using nlohmann::json;

namespace {

template <typename T>
T require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

// Shortest percentage literal that divides back to exactly `fraction`.
std::optional<double> exact_percent(double fraction) {
  for (int digits = 1; digits <= 17; ++digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, fraction * 100.0);
    const double pct = std::strtod(buf, nullptr);
    if (pct / 100.0 == fraction) {
      return pct;
    }
  }
  return std::nullopt;
}

}  // namespace

Network parse_network(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("malformed network JSON: ") + ex.what());
  }
  if (!doc.is_object()) {
    throw ParseError("network document must be a JSON object");
  }

  const json grid_obj = require<json>(doc, "time_grid", "network");
  const auto delta = require<double>(grid_obj, "delta", "time_grid");
  const auto intervals = require<int>(grid_obj, "intervals", "time_grid");
  if (!(delta > 0.0) || intervals < 1) {
    throw ParseError("time_grid: delta must be > 0 and intervals >= 1");
  }

  std::vector<Node> nodes;
  const json node_list = require<json>(doc, "nodes", "network");
  if (!node_list.is_array()) {
    throw ParseError("nodes must be an array");
  }
  for (const json& n : node_list) {
    Node node;
    node.id = require<int>(n, "id", "node");
    node.charging = n.value("charging", false);
    nodes.push_back(node);
  }

  std::vector<Edge> edges;
  const json edge_list = require<json>(doc, "edges", "network");
  if (!edge_list.is_array()) {
    throw ParseError("edges must be an array");
  }
  for (const json& e : edge_list) {
    Edge edge;
    edge.id = require<int>(e, "id", "edge");
    const std::string where = "edge " + std::to_string(edge.id);
    edge.u = require<int>(e, "u", where);
    edge.v = require<int>(e, "v", where);
    edge.energy = require<double>(e, "energy", where);
    if (e.contains("reliability")) {
      edge.reliability = require<double>(e, "reliability", where);
    } else {
      const auto pct = require<double>(e, "reliability_pct", where);
      if (!(pct > 0.0 && pct <= 100.0)) {
        throw ParseError(where + ": reliability outside (0, 100]");
      }
      edge.reliability = pct / 100.0;
    }
    edge.times = require<std::vector<double>>(e, "times", where);
    edge.unverified = e.value("unverified", false);
    edges.push_back(std::move(edge));
  }

  try {
    return Network(TimeGrid(delta, intervals), std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

std::string render_network(const Network& net) {
  json doc;
  doc["time_grid"] = {{"delta", net.grid().delta()}, {"intervals", net.grid().intervals()}};
  doc["nodes"] = json::array();
  for (const Node& n : net.nodes()) {
    doc["nodes"].push_back({{"id", n.id}, {"charging", n.charging}});
  }
  doc["edges"] = json::array();
  for (const Edge& e : net.edges()) {
    json row = {{"id", e.id}, {"u", e.u}, {"v", e.v}, {"energy", e.energy}};
    if (auto pct = exact_percent(e.reliability)) {
      row["reliability_pct"] = *pct;
    } else {
      row["reliability"] = e.reliability;
    }
    row["times"] = e.times;
    row["unverified"] = e.unverified;
    doc["edges"].push_back(std::move(row));
  }
  return doc.dump(2);
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open network file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::filesystem::path bundled_fixture_path() {
  if (const char* env = std::getenv("EVROUTE_FIXTURE")) {
    return env;
  }
  return EVROUTE_FIXTURE_PATH;
}

}  // namespace evroute
