#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "evroute/errors.hpp"
#include "evroute/network_io.hpp"
#include "evroute/oracle.hpp"
#include "evroute/routing.hpp"
#include "evroute/time_engine.hpp"

namespace py = pybind11;
using namespace evroute;

namespace {

py::exception<RoutingError>* routing_error_type = nullptr;

std::string failure_name(RoutingFailure f) {
  switch (f) {
    case RoutingFailure::unreachable: return "unreachable";
    case RoutingFailure::energy_infeasible: return "energy_infeasible";
    case RoutingFailure::deadline_infeasible: return "deadline_infeasible";
    case RoutingFailure::trapped: return "trapped";
  }
  return "unknown";
}

TripRequest make_trip(NodeId origin, NodeId destination, double soc, double reserve, const ChargingPolicy& policy,
                      const DriverPreference& preference, std::vector<NodeId> avoid) {
  TripRequest r;
  r.origin = origin;
  r.destination = destination;
  r.battery = BatteryState(soc, reserve);
  r.policy = policy;
  r.preference = preference;
  r.avoid = std::move(avoid);
  return r;
}

}  // namespace

PYBIND11_MODULE(_evroute, m) {
  m.doc() = "Time-dependent electric-vehicle routing";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StrandedError>(m, "StrandedError", PyExc_RuntimeError);
  // leaked on purpose: the type object must outlive interpreter teardown
  routing_error_type = new py::exception<RoutingError>(m, "RoutingError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const RoutingError& ex) {
      py::object err = py::handle(routing_error_type->ptr())(py::str(ex.what()));
      err.attr("kind") = failure_name(ex.kind());
      PyErr_SetObject(routing_error_type->ptr(), err.ptr());
    }
  });

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<double, int>(), py::arg("delta"), py::arg("intervals"))
      .def_property_readonly("delta", &TimeGrid::delta)
      .def_property_readonly("intervals", &TimeGrid::intervals)
      .def("forward_index", &TimeGrid::forward_index)
      .def("backward_index", &TimeGrid::backward_index);

  py::class_<Node>(m, "Node")
      .def(py::init([](NodeId id, bool charging) { return Node{id, charging}; }), py::arg("id"),
           py::arg("charging") = false)
      .def_readonly("id", &Node::id)
      .def_readonly("charging", &Node::charging);

  py::class_<Edge>(m, "Edge")
      .def(py::init([](EdgeId id, NodeId u, NodeId v, double energy, double reliability, std::vector<double> times) {
             return Edge{id, u, v, energy, reliability, std::move(times), false};
           }),
           py::arg("id"), py::arg("u"), py::arg("v"), py::arg("energy"), py::arg("reliability"), py::arg("times"))
      .def_readonly("id", &Edge::id)
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def_readonly("energy", &Edge::energy)
      .def_readonly("reliability", &Edge::reliability)
      .def_readonly("times", &Edge::times)
      .def_readonly("unverified", &Edge::unverified);

  py::class_<PathSelection>(m, "PathSelection")
      .def_readonly("origin", &PathSelection::origin)
      .def_property_readonly("nodes", &PathSelection::nodes)
      .def_property_readonly("edges", &PathSelection::edge_ids);

  py::class_<Network>(m, "Network")
      .def(py::init<TimeGrid, std::vector<Node>, std::vector<Edge>>(), py::arg("grid"), py::arg("nodes"),
           py::arg("edges"))
      .def_property_readonly("grid", &Network::grid)
      .def_property_readonly("nodes", [](const Network& n) { return std::vector<Node>(n.nodes().begin(), n.nodes().end()); })
      .def_property_readonly("edges", [](const Network& n) { return std::vector<Edge>(n.edges().begin(), n.edges().end()); })
      .def("edge", &Network::edge, py::return_value_policy::copy)
      .def("is_station", &Network::is_station)
      .def("path_from_edges",
           [](const Network& n, NodeId origin, std::vector<EdgeId> ids) { return n.path_from_edges(origin, ids); })
      .def("with_edges_only", [](const Network& n, std::vector<EdgeId> keep) { return n.with_edges_only(keep); })
      .def("with_edge_times", &Network::with_edge_times)
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; });

  m.def("parse_network", &parse_network);
  m.def("render_network", &render_network);
  m.def("load_network", &load_network);
  m.def("bundled_fixture_path", &bundled_fixture_path);

  py::class_<BatteryState>(m, "BatteryState")
      .def(py::init<double, double>(), py::arg("soc") = 100.0, py::arg("reserve") = 0.0)
      .def_readonly("soc", &BatteryState::soc)
      .def_readonly("reserve", &BatteryState::reserve);

  py::class_<ChargingPolicy>(m, "ChargingPolicy")
      .def_static("minimal", &ChargingPolicy::minimal)
      .def_static("duration", &ChargingPolicy::duration, py::arg("rate"))
      .def_static("fixed", &ChargingPolicy::fixed, py::arg("target"));

  py::class_<DriverPreference>(m, "DriverPreference")
      .def_static("time_first", &DriverPreference::time_first)
      .def_static("reliability_first", &DriverPreference::reliability_first)
      .def_static("weighted", &DriverPreference::weighted, py::arg("w_time"), py::arg("w_reliability"),
                  py::arg("w_energy"));

  py::enum_<Algorithm>(m, "Algorithm")
      .value("fifo", Algorithm::fifo)
      .value("dot", Algorithm::dot)
      .value("wsdot", Algorithm::wsdot)
      .value("oracle", Algorithm::oracle);
  py::enum_<SearchStrategy>(m, "SearchStrategy")
      .value("greedy", SearchStrategy::greedy)
      .value("exact", SearchStrategy::exact);
  py::enum_<WaitRule>(m, "WaitRule").value("improving_only", WaitRule::improving_only).value("optional", WaitRule::optional);
  py::enum_<FifoResolution>(m, "FifoResolution")
      .value("interval", FifoResolution::interval)
      .value("boundary", FifoResolution::boundary);

  py::class_<BackwardOptions>(m, "BackwardOptions")
      .def(py::init([](SearchStrategy s, WaitRule w, double max_wait, double earliest) {
             return BackwardOptions{s, w, max_wait, earliest};
           }),
           py::arg("strategy") = SearchStrategy::greedy, py::arg("wait_rule") = WaitRule::improving_only,
           py::arg("max_wait") = std::numeric_limits<double>::infinity(), py::arg("earliest_departure") = 0.0);

  py::class_<TripRequest>(m, "TripRequest")
      .def(py::init(&make_trip), py::arg("origin"), py::arg("destination"), py::arg("soc") = 100.0,
           py::arg("reserve") = 0.0, py::arg("policy") = ChargingPolicy::minimal(),
           py::arg("preference") = DriverPreference::time_first(), py::arg("avoid") = std::vector<NodeId>{});

  py::class_<Leg>(m, "Leg")
      .def_readonly("edge", &Leg::edge)
      .def_readonly("from_node", &Leg::from)
      .def_readonly("to_node", &Leg::to)
      .def_readonly("wait_before", &Leg::wait_before)
      .def_readonly("depart", &Leg::depart)
      .def_readonly("arrive", &Leg::arrive)
      .def_readonly("interval", &Leg::interval)
      .def_readonly("duration", &Leg::duration)
      .def_readonly("energy", &Leg::energy)
      .def_readonly("reliability", &Leg::reliability)
      .def_readonly("soc_before", &Leg::soc_before)
      .def_readonly("soc_after", &Leg::soc_after)
      .def_readonly("charge_amount", &Leg::charge_amount);

  py::class_<Itinerary>(m, "Itinerary")
      .def_readonly("algorithm", &Itinerary::algorithm)
      .def_readonly("origin", &Itinerary::origin)
      .def_readonly("destination", &Itinerary::destination)
      .def_readonly("legs", &Itinerary::legs)
      .def_property_readonly("nodes", &Itinerary::nodes)
      .def_property_readonly("origin_departure", &Itinerary::origin_departure)
      .def_property_readonly("destination_arrival", &Itinerary::destination_arrival)
      .def_property_readonly("travel_time", &Itinerary::travel_time)
      .def_property_readonly("total_wait", &Itinerary::total_wait)
      .def_property_readonly("elapsed", &Itinerary::elapsed)
      .def_property_readonly("reliability", &Itinerary::reliability)
      .def_property_readonly("final_soc", &Itinerary::final_soc)
      .def("to_json", [](const Itinerary& it, int indent) { return itinerary_to_json(it, indent); },
           py::arg("indent") = 2)
      .def_static("from_json", &itinerary_from_json)
      .def("__eq__", [](const Itinerary& a, const Itinerary& b) { return a == b; });

  m.def("route_fifo", &route_fifo, py::arg("network"), py::arg("request"), py::arg("depart"));
  m.def("route_dot", &route_dot, py::arg("network"), py::arg("request"), py::arg("deadline"),
        py::arg("options") = BackwardOptions{});
  m.def("route_wsdot", &route_wsdot, py::arg("network"), py::arg("request"), py::arg("deadline"),
        py::arg("options") = BackwardOptions{});

  py::class_<RouteMetrics>(m, "RouteMetrics")
      .def_readonly("path", &RouteMetrics::path)
      .def_readonly("travel_time", &RouteMetrics::travel_time)
      .def_readonly("arrival", &RouteMetrics::arrival)
      .def_readonly("energy", &RouteMetrics::energy)
      .def_readonly("reliability", &RouteMetrics::reliability)
      .def_readonly("energy_feasible", &RouteMetrics::energy_feasible);
  m.def("enumerate_paths", &enumerate_paths);
  m.def("path_metrics", &path_metrics, py::arg("path"), py::arg("network"), py::arg("depart"),
        py::arg("battery") = BatteryState());
  m.def("rank_routes", &rank_routes);

  py::class_<FifoViolation>(m, "FifoViolation")
      .def_readonly("earlier", &FifoViolation::earlier)
      .def_readonly("later", &FifoViolation::later)
      .def_readonly("earlier_arrival", &FifoViolation::earlier_arrival)
      .def_readonly("later_arrival", &FifoViolation::later_arrival);
  py::class_<FifoReport>(m, "FifoReport")
      .def_readonly("fifo", &FifoReport::fifo)
      .def_readonly("violations", &FifoReport::violations);
  m.def("check_fifo", &check_fifo, py::arg("network"), py::arg("edge"),
        py::arg("resolution") = FifoResolution::interval);
  m.def("network_is_fifo", &network_is_fifo, py::arg("network"), py::arg("resolution") = FifoResolution::interval);

  py::class_<WaitGrid>(m, "WaitGrid")
      .def_static("no_waits", &WaitGrid::no_waits)
      .def_static("boundaries", &WaitGrid::boundaries, py::arg("keep_zero") = false,
                  py::arg("max_wait") = std::numeric_limits<double>::infinity())
      .def_static("explicit_grid", &WaitGrid::explicit_grid);
  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("best", &OracleResult::best)
      .def_readonly("objective", &OracleResult::objective)
      .def_readonly("candidates", &OracleResult::candidates);
  m.def("brute_force_forward", &brute_force_forward, py::arg("network"), py::arg("origin"), py::arg("destination"),
        py::arg("depart"), py::arg("battery") = BatteryState(), py::arg("policy") = ChargingPolicy::minimal());
  m.def("brute_force_waited", &brute_force_waited, py::arg("network"), py::arg("origin"), py::arg("destination"),
        py::arg("deadline"), py::arg("battery") = BatteryState(), py::arg("policy") = ChargingPolicy::minimal(),
        py::arg("grid") = WaitGrid::boundaries(), py::arg("earliest_departure") = 0.0);

  py::class_<ReliabilityEstimate>(m, "ReliabilityEstimate")
      .def_readonly("estimate", &ReliabilityEstimate::estimate)
      .def_readonly("standard_error", &ReliabilityEstimate::standard_error)
      .def_readonly("samples", &ReliabilityEstimate::samples)
      .def_readonly("analytic", &ReliabilityEstimate::analytic);
  m.def("monte_carlo_reliability", &monte_carlo_reliability, py::arg("itinerary"), py::arg("network"),
        py::arg("samples"), py::arg("seed"), py::arg("partitions") = 1u, py::call_guard<py::gil_scoped_release>());

  py::class_<ReplanRequest>(m, "ReplanRequest")
      .def(py::init([](Algorithm alg, NodeId destination, double deadline, std::vector<NodeId> history,
                       const BackwardOptions& options, const ChargingPolicy& policy) {
             ReplanRequest r;
             r.algorithm = alg;
             r.destination = destination;
             r.deadline = deadline;
             r.history = std::move(history);
             r.options = options;
             r.policy = policy;
             return r;
           }),
           py::arg("algorithm"), py::arg("destination"), py::arg("deadline") = 0.0,
           py::arg("history") = std::vector<NodeId>{}, py::arg("options") = BackwardOptions{},
           py::arg("policy") = ChargingPolicy::minimal());
  m.def("replan", &replan, py::arg("network"), py::arg("position"), py::arg("now"), py::arg("battery"),
        py::arg("request"));
}
