#include "evroute/itinerary.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "evroute/errors.hpp"

namespace evroute {

using nlohmann::json;

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::fifo:
      return "fifo";
    case Algorithm::dot:
      return "dot";
    case Algorithm::wsdot:
      return "wsdot";
    case Algorithm::oracle:
      return "oracle";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "fifo") return Algorithm::fifo;
  if (name == "dot") return Algorithm::dot;
  if (name == "wsdot") return Algorithm::wsdot;
  if (name == "oracle") return Algorithm::oracle;
  throw ParseError("unknown algorithm '" + std::string(name) + "'");
}

double Itinerary::origin_departure() const { return legs.empty() ? start_time : legs.front().depart; }

double Itinerary::destination_arrival() const { return legs.empty() ? start_time : legs.back().arrive; }

double Itinerary::travel_time() const {
  double sum = 0.0;
  for (const Leg& l : legs) sum += l.duration;
  return sum;
}

double Itinerary::total_wait() const {
  double sum = 0.0;
  for (const Leg& l : legs) sum += l.wait_before;
  return sum;
}

double Itinerary::elapsed() const { return destination_arrival() - origin_departure(); }

double Itinerary::reliability() const {
  double p = 1.0;
  for (const Leg& l : legs) p *= l.reliability;
  return p;
}

double Itinerary::final_soc() const { return legs.empty() ? initial_soc : legs.back().soc_after; }

double Itinerary::total_charge() const {
  double sum = 0.0;
  for (const Leg& l : legs) sum += l.charge_amount;
  return sum;
}

std::vector<NodeId> Itinerary::nodes() const {
  std::vector<NodeId> out{origin};
  for (const Leg& l : legs) out.push_back(l.to);
  return out;
}

PathSelection Itinerary::path() const {
  PathSelection p{origin, {}};
  for (const Leg& l : legs) p.steps.push_back({l.edge, l.from, l.to});
  return p;
}

namespace {

json leg_to_json(const Leg& l) {
  return {{"edge", l.edge},
          {"from", l.from},
          {"to", l.to},
          {"wait_before", l.wait_before},
          {"depart", l.depart},
          {"arrive", l.arrive},
          {"interval", l.interval},
          {"duration", l.duration},
          {"energy", l.energy},
          {"reliability", l.reliability},
          {"soc_before", l.soc_before},
          {"soc_after", l.soc_after},
          {"charge_amount", l.charge_amount}};
}

Leg leg_from_json(const json& j) {
  Leg l;
  l.edge = j.at("edge").get<EdgeId>();
  l.from = j.at("from").get<NodeId>();
  l.to = j.at("to").get<NodeId>();
  l.wait_before = j.at("wait_before").get<double>();
  l.depart = j.at("depart").get<double>();
  l.arrive = j.at("arrive").get<double>();
  l.interval = j.at("interval").get<IntervalIndex>();
  l.duration = j.at("duration").get<double>();
  l.energy = j.at("energy").get<double>();
  l.reliability = j.at("reliability").get<double>();
  l.soc_before = j.at("soc_before").get<double>();
  l.soc_after = j.at("soc_after").get<double>();
  l.charge_amount = j.at("charge_amount").get<double>();
  return l;
}

}  // namespace

std::string itinerary_to_json(const Itinerary& it, int indent) {
  json doc;
  doc["algorithm"] = std::string(to_string(it.algorithm));
  doc["origin"] = it.origin;
  doc["destination"] = it.destination;
  doc["start_time"] = it.start_time;
  doc["initial_soc"] = it.initial_soc;
  doc["legs"] = json::array();
  for (const Leg& l : it.legs) doc["legs"].push_back(leg_to_json(l));
  doc["route"] = it.nodes();
  doc["origin_departure"] = it.origin_departure();
  doc["destination_arrival"] = it.destination_arrival();
  doc["travel_time"] = it.travel_time();
  doc["total_wait"] = it.total_wait();
  doc["elapsed"] = it.elapsed();
  doc["reliability"] = it.reliability();
  doc["final_soc"] = it.final_soc();
  return doc.dump(indent);
}

Itinerary itinerary_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Itinerary it;
    it.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
    it.origin = doc.at("origin").get<NodeId>();
    it.destination = doc.at("destination").get<NodeId>();
    it.start_time = doc.at("start_time").get<double>();
    it.initial_soc = doc.at("initial_soc").get<double>();
    for (const json& l : doc.at("legs")) it.legs.push_back(leg_from_json(l));
    if (doc.contains("travel_time") && doc["travel_time"].get<double>() != it.travel_time()) {
      throw ParseError("itinerary travel_time disagrees with its legs");
    }
    if (doc.contains("reliability") && doc["reliability"].get<double>() != it.reliability()) {
      throw ParseError("itinerary reliability disagrees with its legs");
    }
    return it;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed itinerary JSON: ") + ex.what());
  }
}

}  // namespace evroute
