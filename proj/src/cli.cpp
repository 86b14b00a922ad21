#include "evroute/cli.hpp"

#include <cmath>
#include <deque>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "evroute/errors.hpp"
#include "evroute/network_io.hpp"
#include "evroute/oracle.hpp"
#include "evroute/routing.hpp"
#include "evroute/time_engine.hpp"

namespace evroute::cli {

using nlohmann::json;

namespace {

constexpr double kTimeTolerance = 0.015;
constexpr std::uint64_t kDefaultSeed = 20200915;

struct RunConfig {
  std::string network_path;
  std::string edges;
  bool verified_only = false;
  std::string algorithm = "fifo";
  NodeId origin = 10;
  NodeId destination = 6;
  std::optional<double> depart;
  std::optional<double> deadline;
  std::string scenario;
  double soc = 100.0;
  double reserve = 0.0;
  std::string charge_policy = "minimal";
  std::string preference = "time";
  std::string search = "greedy";
  std::string wait_rule = "improving";
  double max_wait = std::numeric_limits<double>::infinity();
  std::string format = "table";
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 100000;
  std::string resolution = "interval";
  std::string scenario_file;
};

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s + "%";
}

std::vector<EdgeId> parse_edge_list(const std::string& text) {
  std::vector<EdgeId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        for (int e = lo; e <= hi; ++e) out.push_back(e);
      }
    } catch (const std::exception&) {
      throw ParseError("bad edge list '" + text + "'");
    }
  }
  return out;
}

ChargingPolicy parse_policy(const std::string& text) {
  try {
    if (text == "minimal") return ChargingPolicy::minimal();
    if (text.rfind("duration:", 0) == 0) return ChargingPolicy::duration(std::stod(text.substr(9)));
    if (text.rfind("target:", 0) == 0) return ChargingPolicy::fixed(std::stod(text.substr(7)));
  } catch (const std::invalid_argument& ex) {
    throw ParseError("bad charge policy '" + text + "': " + ex.what());
  }
  throw ParseError("bad charge policy '" + text + "' (minimal | duration:<rate> | target:<pct>)");
}

DriverPreference parse_preference(const std::string& text) {
  if (text == "time") return DriverPreference::time_first();
  if (text == "reliability") return DriverPreference::reliability_first();
  if (text.rfind("weighted:", 0) == 0) {
    double w[3] = {0, 0, 0};
    std::stringstream ss(text.substr(9));
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 3) {
      try {
        w[i++] = std::stod(item);
      } catch (const std::exception&) {
        throw ParseError("bad preference weights '" + text + "'");
      }
    }
    if (i != 3) throw ParseError("weighted preference needs three weights");
    try {
      return DriverPreference::weighted(w[0], w[1], w[2]);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
  }
  throw ParseError("bad preference '" + text + "' (time | reliability | weighted:wt,wr,we)");
}

Network load(const RunConfig& cfg) {
  Network net = load_network(cfg.network_path.empty() ? bundled_fixture_path() : std::filesystem::path(cfg.network_path));
  if (cfg.verified_only) {
    std::vector<EdgeId> keep;
    for (const Edge& e : net.edges())
      if (!e.unverified) keep.push_back(e.id);
    net = net.with_edges_only(keep);
  }
  if (!cfg.edges.empty()) {
    try {
      net = net.with_edges_only(parse_edge_list(cfg.edges));
    } catch (const std::out_of_range& ex) {
      throw ParseError(ex.what());
    }
  }
  return net;
}

TripRequest trip_of(const RunConfig& cfg) {
  TripRequest req;
  req.origin = cfg.origin;
  req.destination = cfg.destination;
  try {
    req.battery = BatteryState(cfg.soc, cfg.reserve);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  req.policy = parse_policy(cfg.charge_policy);
  req.preference = parse_preference(cfg.preference);
  return req;
}

BackwardOptions backward_of(const RunConfig& cfg) {
  BackwardOptions opts;
  if (cfg.search == "greedy") opts.strategy = SearchStrategy::greedy;
  else if (cfg.search == "exact") opts.strategy = SearchStrategy::exact;
  else throw ParseError("bad search strategy '" + cfg.search + "' (greedy | exact)");
  if (cfg.wait_rule == "improving") opts.wait_rule = WaitRule::improving_only;
  else if (cfg.wait_rule == "optional") opts.wait_rule = WaitRule::optional;
  else throw ParseError("bad wait rule '" + cfg.wait_rule + "' (improving | optional)");
  opts.max_wait = cfg.max_wait;
  return opts;
}

Algorithm algorithm_of(const RunConfig& cfg) {
  const Algorithm alg = algorithm_from_string(cfg.algorithm);
  if (alg == Algorithm::oracle) throw ParseError("--alg must be fifo, dot or wsdot");
  if (alg == Algorithm::fifo) {
    if (cfg.deadline) throw ParseError("fifo takes --depart, not --deadline");
    if (!cfg.scenario.empty()) throw ParseError("--scenario applies to dot and wsdot");
    return alg;
  }
  if (cfg.scenario == "A") {
    if (cfg.deadline) throw ParseError("scenario A derives the deadline; drop --deadline");
  } else {
    if (!cfg.scenario.empty() && cfg.scenario != "B") throw ParseError("--scenario must be A or B");
    if (cfg.depart) throw ParseError(cfg.algorithm + " takes --deadline, not --depart");
    if (!cfg.deadline) throw ParseError(cfg.algorithm + " requires --deadline");
  }
  return alg;
}

/// Deadline for the backward algorithms; scenario A seeds it with the FIFO arrival.
double deadline_of(const RunConfig& cfg, const Network& net, const TripRequest& req) {
  if (cfg.scenario == "A") {
    return route_fifo(net, req, cfg.depart.value_or(0.0)).destination_arrival();
  }
  return *cfg.deadline;
}

Itinerary run_algorithm(Algorithm alg, const RunConfig& cfg, const Network& net, const TripRequest& req) {
  switch (alg) {
    case Algorithm::fifo:
      return route_fifo(net, req, cfg.depart.value_or(0.0));
    case Algorithm::dot:
      return route_dot(net, req, deadline_of(cfg, net, req), backward_of(cfg));
    case Algorithm::wsdot:
      return route_wsdot(net, req, deadline_of(cfg, net, req), backward_of(cfg));
    case Algorithm::oracle:
      break;
  }
  throw ParseError("unsupported algorithm");
}

int exit_code_of(RoutingFailure kind) {
  switch (kind) {
    case RoutingFailure::unreachable:
    case RoutingFailure::trapped:
      return kUnreachable;
    case RoutingFailure::energy_infeasible:
      return kEnergyInfeasible;
    case RoutingFailure::deadline_infeasible:
      return kDeadlineInfeasible;
  }
  return kMalformed;
}

void print_itinerary(const Itinerary& it, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << itinerary_to_json(it) << "\n";
  } else {
    render_table(it, out);
  }
}

int cmd_route(const RunConfig& cfg, std::ostream& out) {
  const Algorithm alg = algorithm_of(cfg);
  const Network net = load(cfg);
  const TripRequest req = trip_of(cfg);
  print_itinerary(run_algorithm(alg, cfg, net, req), cfg, out);
  return kOk;
}

int cmd_paths(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Network net = load(cfg);
  const TripRequest req = trip_of(cfg);
  const auto paths = enumerate_paths(net, req.origin, req.destination);
  if (paths.empty()) {
    err << "no route from " << req.origin << " to " << req.destination << "\n";
    return kUnreachable;
  }
  std::vector<RouteMetrics> metrics;
  for (const auto& p : paths) metrics.push_back(path_metrics(p, net, cfg.depart.value_or(0.0), req.battery));
  metrics = rank_routes(std::move(metrics), req.preference);
  if (cfg.format == "json") {
    json doc = json::array();
    for (const auto& m : metrics) {
      doc.push_back({{"route", m.path.nodes()},
                     {"edges", m.path.edge_ids()},
                     {"travel_time", m.travel_time},
                     {"arrival", m.arrival},
                     {"energy", m.energy},
                     {"reliability", m.reliability},
                     {"energy_feasible", m.energy_feasible}});
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << std::left << std::setw(6) << "Rank" << std::setw(26) << "Route" << std::setw(16) << "Edges" << std::setw(10)
      << "Time" << std::setw(10) << "Energy" << std::setw(13) << "Reliability"
      << "Feasible\n";
  int rank = 1;
  for (const auto& m : metrics) {
    std::string route, edges;
    for (NodeId n : m.path.nodes()) route += (route.empty() ? "" : "-") + std::to_string(n);
    for (EdgeId e : m.path.edge_ids()) edges += (edges.empty() ? "" : ",") + std::to_string(e);
    out << std::left << std::setw(6) << rank++ << std::setw(26) << route << std::setw(16) << edges << std::setw(10)
        << fixed(m.travel_time) << std::setw(10) << percent(m.energy) << std::setw(13) << percent(m.reliability * 100)
        << (m.energy_feasible ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_check_fifo(const RunConfig& cfg, std::ostream& out) {
  const Network net = load(cfg);
  FifoResolution res;
  if (cfg.resolution == "interval") res = FifoResolution::interval;
  else if (cfg.resolution == "boundary") res = FifoResolution::boundary;
  else throw ParseError("bad resolution '" + cfg.resolution + "' (interval | boundary)");
  const FifoReport report = network_is_fifo(net, res);
  if (cfg.format == "json") {
    json doc;
    doc["fifo"] = report.fifo;
    doc["edges"] = json::array();
    for (const auto& [id, violations] : report.violations) {
      json pairs = json::array();
      for (const auto& v : violations) {
        pairs.push_back({{"pair", {v.earlier, v.later}},
                         {"earlier_arrival", v.earlier_arrival},
                         {"later_arrival", v.later_arrival}});
      }
      doc["edges"].push_back({{"edge", id}, {"violations", pairs}});
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << (report.fifo ? "FIFO" : "NON-FIFO") << "\n";
  for (const auto& [id, violations] : report.violations) {
    out << "edge " << id << ":";
    if (violations.empty()) out << " ok";
    for (const auto& v : violations) {
      const Edge& e = net.edge(id);
      out << " pair (" << v.earlier << "," << v.later << ") t" << v.earlier << " = " << fixed(e.time_at(v.earlier))
          << " > " << (res == FifoResolution::interval ? "delta + " : "") << "t" << v.later << " = "
          << fixed(v.later_arrival - v.earlier_arrival + e.time_at(v.earlier)) << ";";
    }
    out << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Algorithm alg = algorithm_of(cfg);
  const Network net = load(cfg);
  const TripRequest req = trip_of(cfg);
  const Itinerary it = run_algorithm(alg, cfg, net, req);
  const BackwardOptions opts = backward_of(cfg);
  bool ok = true;

  auto verdict = [&](double algorithm_value, double oracle_value, bool higher_is_better) {
    const double gap = higher_is_better ? oracle_value - algorithm_value : algorithm_value - oracle_value;
    if (std::abs(gap) <= kTimeTolerance) return std::string("agree");
    if (gap > 0) return std::string("greedy suboptimal (known)");
    ok = false;
    return std::string("MISMATCH: algorithm beats the exhaustive optimum");
  };

  out << "algorithm " << to_string(alg) << ": route";
  for (NodeId n : it.nodes()) out << " " << n;
  out << "\n";
  if (alg == Algorithm::fifo) {
    const auto oracle = brute_force_forward(net, req.origin, req.destination, it.origin_departure(), req.battery,
                                            req.policy);
    out << "arrival: algorithm " << fixed(it.destination_arrival()) << ", oracle "
        << (oracle.best ? fixed(oracle.objective) : "none") << " (" << oracle.candidates << " candidates)\n";
    out << "verdict: " << (oracle.best ? verdict(it.destination_arrival(), oracle.objective, false) : "no oracle solution")
        << "\n";
  } else {
    const double deadline = it.destination_arrival();
    const WaitGrid grid = alg == Algorithm::dot ? WaitGrid::no_waits()
                                                : WaitGrid::boundaries(opts.wait_rule == WaitRule::optional,
                                                                       opts.max_wait);
    const auto oracle =
        brute_force_waited(net, req.origin, req.destination, deadline, req.battery, req.policy, grid);
    if (alg == Algorithm::dot) {
      out << "origin departure: algorithm " << fixed(it.origin_departure()) << ", oracle "
          << (oracle.best ? fixed(oracle.best->origin_departure()) : "none") << " (" << oracle.candidates
          << " candidates)\n";
      out << "verdict: "
          << (oracle.best ? verdict(it.origin_departure(), oracle.best->origin_departure(), true) : "no oracle solution")
          << "\n";
    } else {
      out << "travel time: algorithm " << fixed(it.travel_time()) << ", oracle "
          << (oracle.best ? fixed(oracle.objective) : "none") << " (" << oracle.candidates << " candidates)\n";
      out << "verdict: " << (oracle.best ? verdict(it.travel_time(), oracle.objective, false) : "no oracle solution")
          << "\n";
    }
  }

  const auto mc = monte_carlo_reliability(it, net, cfg.samples, cfg.seed);
  const double sigma = mc.standard_error;
  const double dev = std::abs(mc.estimate - mc.analytic);
  const bool consistent = sigma > 0 ? dev <= 3 * sigma : dev == 0.0;
  ok = ok && consistent;
  out << "reliability: analytic " << fixed(mc.analytic * 100) << "%, monte carlo " << fixed(mc.estimate * 100, 3)
      << "% +/- " << fixed(sigma * 100, 3) << "% (" << mc.samples << " samples, seed " << cfg.seed << ") -> "
      << (consistent ? "within 3 sigma" : "OUTSIDE 3 sigma") << "\n";
  return ok ? kOk : kMalformed;
}

int cmd_replan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Algorithm alg = algorithm_of(cfg);
  Network net = load(cfg);
  const TripRequest req = trip_of(cfg);

  std::ifstream in(cfg.scenario_file);
  if (!in) throw ParseError("cannot open scenario file " + cfg.scenario_file);
  json records;
  try {
    records = json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed scenario: ") + ex.what());
  }
  if (!records.is_array()) throw ParseError("scenario must be a JSON list");

  ReplanRequest rr;
  rr.algorithm = alg;
  rr.destination = req.destination;
  rr.policy = req.policy;
  rr.preference = req.preference;
  rr.options = backward_of(cfg);
  if (alg != Algorithm::fifo) rr.deadline = deadline_of(cfg, net, req);

  std::optional<Itinerary> plan;
  try {
    plan = run_algorithm(alg, cfg, net, req);
  } catch (const RoutingError&) {
  }
  std::vector<NodeId> history;
  int status = kOk;

  for (const json& rec : records) {
    double at_time = 0.0;
    NodeId node = 0;
    double soc = 0.0;
    try {
      at_time = rec.at("at_time").get<double>();
      if (rec.contains("edge_id") && !rec["edge_id"].is_null()) {
        net = net.with_edge_times(rec["edge_id"].get<EdgeId>(), rec.at("new_times").get<std::vector<double>>());
      }
      node = rec.at("vehicle").at("node").get<NodeId>();
      soc = rec.at("vehicle").at("soc").get<double>();
    } catch (const json::exception& ex) {
      throw ParseError(std::string("malformed scenario record: ") + ex.what());
    } catch (const std::out_of_range& ex) {
      throw ParseError(std::string("scenario record: ") + ex.what());
    }

    if (plan) {
      const auto driven = plan->nodes();
      const auto here = std::find(driven.begin(), driven.end(), node);
      if (here != driven.end()) {
        for (auto p = driven.begin(); p != here; ++p)
          if (std::find(history.begin(), history.end(), *p) == history.end()) history.push_back(*p);
      }
    }
    rr.history = history;
    out << "update at t=" << fixed(at_time) << ": vehicle at node " << node << " with " << percent(soc) << "\n";
    try {
      BatteryState battery(soc, std::min(req.battery.reserve, soc));
      plan = replan(net, node, at_time, battery, rr);
      print_itinerary(*plan, cfg, out);
    } catch (const RoutingError& ex) {
      err << ex.what() << "\n";
      status = exit_code_of(ex.kind());
      plan.reset();
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
  }
  return status;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--network", cfg.network_path, "Network JSON file (defaults to the bundled fixture)");
  sub->add_option("--edges", cfg.edges, "Restrict to these edge ids, e.g. 1-7 or 1,2,5");
  sub->add_flag("--verified-only", cfg.verified_only, "Drop edges flagged unverified");
  sub->add_option("--format", cfg.format, "table | json")->check(CLI::IsMember({"table", "json"}));
}

void add_trip(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--from", cfg.origin, "Origin node");
  sub->add_option("--to", cfg.destination, "Destination node");
  sub->add_option("--depart", cfg.depart, "Departure time (fifo, scenario A seed)");
  sub->add_option("--soc", cfg.soc, "Initial state of charge, percent");
  sub->add_option("--reserve", cfg.reserve, "Reserve floor, percent");
  sub->add_option("--charge-policy", cfg.charge_policy, "minimal | duration:<rate> | target:<pct>");
  sub->add_option("--pref", cfg.preference, "time | reliability | weighted:wt,wr,we");
}

void add_algorithm(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alg", cfg.algorithm, "fifo | dot | wsdot");
  sub->add_option("--deadline", cfg.deadline, "Arrival deadline (dot, wsdot)");
  sub->add_option("--scenario", cfg.scenario, "A: deadline from the FIFO arrival; B: explicit deadline");
  sub->add_option("--search", cfg.search, "greedy | exact");
  sub->add_option("--wait-rule", cfg.wait_rule, "improving | optional");
  sub->add_option("--max-wait", cfg.max_wait, "Longest single stop");
  sub->add_option("--seed", cfg.seed, "Monte Carlo seed");
}

}  // namespace

void render_table(const Itinerary& it, std::ostream& out) {
  const bool backward = it.algorithm == Algorithm::dot || it.algorithm == Algorithm::wsdot;
  const bool waits = it.algorithm == Algorithm::wsdot || it.total_wait() > 0.0;
  std::vector<std::size_t> order(it.legs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = backward ? order.size() - 1 - i : i;

  out << to_string(it.algorithm) << " " << it.origin << " -> " << it.destination << ": leave "
      << fixed(it.origin_departure()) << ", arrive " << fixed(it.destination_arrival()) << "\n";
  if (it.legs.empty()) {
    out << "(already at destination)\n";
    return;
  }

  std::deque<std::pair<std::string, std::vector<std::string>>> rows;
  auto row = [&](std::string name) -> std::vector<std::string>& {
    rows.emplace_back(std::move(name), std::vector<std::string>{});
    return rows.back().second;
  };
  auto& route = row("Route");
  auto& time = row("Time");
  std::vector<std::string>* wait = waits ? &row("Waiting time") : nullptr;
  auto& clock = row("Travel time");
  auto& use = row("Consumption");
  auto& soc = row("SOC");
  auto& rel = row("Reliability");
  const bool charged = it.total_charge() > 0.0;
  std::vector<std::string>* charge_row = charged ? &row("Charge") : nullptr;

  for (std::size_t i : order) {
    const Leg& l = it.legs[i];
    route.push_back(backward ? std::to_string(l.to) + "-" + std::to_string(l.from)
                             : std::to_string(l.from) + "-" + std::to_string(l.to));
    time.push_back(fixed(l.duration));
    if (wait) {
      // backward tables list the stop at the leg's downstream node
      const double w = backward ? (i + 1 < it.legs.size() ? it.legs[i + 1].wait_before : 0.0) : l.wait_before;
      wait->push_back(fixed(w));
    }
    clock.push_back(backward ? fixed(l.depart) : fixed(l.arrive - it.origin_departure()));
    use.push_back(percent(l.energy));
    soc.push_back(percent(l.soc_before));
    rel.push_back(percent(l.reliability * 100));
    if (charge_row) charge_row->push_back(percent(l.charge_amount));
  }
  route.push_back("Total");
  time.push_back(fixed(it.travel_time()));
  if (wait) wait->push_back(fixed(it.total_wait()));
  clock.push_back(it.algorithm == Algorithm::wsdot ? fixed(it.elapsed()) + ", " + fixed(it.travel_time())
                                                   : fixed(it.elapsed()));
  double energy = 0.0;
  for (const Leg& l : it.legs) energy += l.energy;
  use.push_back(percent(energy));
  soc.push_back(percent(it.final_soc()));
  rel.push_back(percent(it.reliability() * 100));
  if (charge_row) charge_row->push_back(percent(it.total_charge()));

  std::size_t label_width = 0;
  std::vector<std::size_t> widths(route.size(), 0);
  for (const auto& [name, cells] : rows) {
    label_width = std::max(label_width, name.size());
    for (std::size_t c = 0; c < cells.size(); ++c) widths[c] = std::max(widths[c], cells[c].size());
  }
  for (const auto& [name, cells] : rows) {
    out << std::left << std::setw(static_cast<int>(label_width + 2)) << name;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << std::right << std::setw(static_cast<int>(widths[c] + 2)) << cells[c];
    }
    out << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electric-vehicle routing on time-dependent stochastic networks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* route = app.add_subcommand("route", "Route one trip and print the itinerary");
  add_common(route, cfg);
  add_trip(route, cfg);
  add_algorithm(route, cfg);

  auto* paths = app.add_subcommand("paths", "List and rank every simple route");
  add_common(paths, cfg);
  add_trip(paths, cfg);

  auto* fifo = app.add_subcommand("check-fifo", "Report first-in-first-out violations per edge");
  add_common(fifo, cfg);
  fifo->add_option("--resolution", cfg.resolution, "interval | boundary");

  auto* verify = app.add_subcommand("verify", "Compare an algorithm with the exhaustive oracle and Monte Carlo");
  add_common(verify, cfg);
  add_trip(verify, cfg);
  add_algorithm(verify, cfg);
  verify->add_option("--samples", cfg.samples, "Monte Carlo samples");

  auto* replan_cmd = app.add_subcommand("replan", "Replay timed edge updates and replan after each");
  add_common(replan_cmd, cfg);
  add_trip(replan_cmd, cfg);
  add_algorithm(replan_cmd, cfg);
  replan_cmd->add_option("scenario_file", cfg.scenario_file, "Scenario JSON file")->required();

  std::vector<std::string> argv_store{"evroute"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    return kMalformed;
  }

  try {
    if (route->parsed()) return cmd_route(cfg, out);
    if (paths->parsed()) return cmd_paths(cfg, out, err);
    if (fifo->parsed()) return cmd_check_fifo(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (replan_cmd->parsed()) return cmd_replan(cfg, out, err);
  } catch (const RoutingError& ex) {
    err << ex.what() << "\n";
    return exit_code_of(ex.kind());
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformed;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace evroute::cli
