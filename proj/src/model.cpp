#include "adequacy/model.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

namespace adeq {

int Network::bus_index(std::string_view id) const {
  for (size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == id) return static_cast<int>(i);
  return -1;
}

int Network::line_index(std::string_view id) const {
  for (size_t i = 0; i < lines.size(); ++i)
    if (lines[i].id == id) return static_cast<int>(i);
  return -1;
}

int Network::slack_index() const {
  for (size_t i = 0; i < buses.size(); ++i)
    if (buses[i].is_slack) return static_cast<int>(i);
  return -1;
}

namespace {

using nlohmann::ordered_json;

double require_number(const ordered_json& obj, const std::string& key,
                      const std::string& where) {
  if (!obj.contains(key))
    throw ParseError("missing key: " + key + " (" + where + ")");
  const auto& v = obj.at(key);
  if (!v.is_number())
    throw ParseError("expected number for key: " + key + " (" + where + ")");
  return v.get<double>();
}

std::string require_string(const ordered_json& obj, const std::string& key,
                           const std::string& where) {
  if (!obj.contains(key))
    throw ParseError("missing key: " + key + " (" + where + ")");
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw ParseError("expected string for key: " + key + " (" + where + ")");
  return v.get<std::string>();
}

}  // namespace

Network parse_network(const std::string& document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("malformed document: top level is not an object");

  Network n;
  if (doc.contains("base_mva")) {
    if (!doc.at("base_mva").is_number())
      throw ParseError("expected number for key: base_mva");
    n.base_mva = doc.at("base_mva").get<double>();
  }
  if (!doc.contains("buses")) throw ParseError("missing key: buses");
  if (!doc.at("buses").is_array()) throw ParseError("expected array for key: buses");
  if (!doc.contains("lines")) throw ParseError("missing key: lines");
  if (!doc.at("lines").is_array()) throw ParseError("expected array for key: lines");

  std::set<std::string> bus_ids;
  for (const auto& jb : doc.at("buses")) {
    if (!jb.is_object()) throw ParseError("expected object in key: buses");
    Bus b;
    b.id = require_string(jb, "id", "buses");
    const std::string where = "bus " + b.id;
    b.demand_mw = require_number(jb, "demand_mw", where);
    b.gen_capacity_mw = require_number(jb, "gen_capacity_mw", where);
    b.gen_setpoint_mw = require_number(jb, "gen_setpoint_mw", where);
    if (jb.contains("slack")) {
      if (!jb.at("slack").is_boolean())
        throw ParseError("expected boolean for key: slack (" + where + ")");
      b.is_slack = jb.at("slack").get<bool>();
    }
    if (!bus_ids.insert(b.id).second)
      throw ParseError("duplicate bus id: " + b.id);
    n.buses.push_back(std::move(b));
  }

  std::set<std::string> line_ids;
  for (const auto& jl : doc.at("lines")) {
    if (!jl.is_object()) throw ParseError("expected object in key: lines");
    Line l;
    l.id = require_string(jl, "id", "lines");
    const std::string where = "line " + l.id;
    l.from_bus = require_string(jl, "from", where);
    l.to_bus = require_string(jl, "to", where);
    l.reactance_pu = require_number(jl, "reactance_pu", where);
    l.resistance_pu = require_number(jl, "resistance_pu", where);
    l.capacity_mw = require_number(jl, "capacity_mw", where);
    if (!line_ids.insert(l.id).second)
      throw ParseError("duplicate line id: " + l.id);
    if (n.bus_index(l.from_bus) < 0)
      throw ParseError("unknown bus: " + l.from_bus + " (key from, line " + l.id + ")");
    if (n.bus_index(l.to_bus) < 0)
      throw ParseError("unknown bus: " + l.to_bus + " (key to, line " + l.id + ")");
    n.lines.push_back(std::move(l));
  }
  return n;
}

std::string render_network(const Network& n) {
  ordered_json doc;
  doc["base_mva"] = n.base_mva;
  doc["buses"] = ordered_json::array();
  for (const auto& b : n.buses) {
    ordered_json jb;
    jb["id"] = b.id;
    jb["demand_mw"] = b.demand_mw;
    jb["gen_capacity_mw"] = b.gen_capacity_mw;
    jb["gen_setpoint_mw"] = b.gen_setpoint_mw;
    jb["slack"] = b.is_slack;
    doc["buses"].push_back(std::move(jb));
  }
  doc["lines"] = ordered_json::array();
  for (const auto& l : n.lines) {
    ordered_json jl;
    jl["id"] = l.id;
    jl["from"] = l.from_bus;
    jl["to"] = l.to_bus;
    jl["reactance_pu"] = l.reactance_pu;
    jl["resistance_pu"] = l.resistance_pu;
    jl["capacity_mw"] = l.capacity_mw;
    doc["lines"].push_back(std::move(jl));
  }
  return doc.dump(2) + "\n";
}

ValidationReport validate_network(const Network& n) {
  ValidationReport rep;
  auto add = [&rep](std::string msg) { rep.issues.push_back(std::move(msg)); };

  if (n.base_mva <= 0.0) add("nonpositive base_mva");
  if (n.buses.size() < 2) add("fewer than 2 buses");

  std::set<std::string> seen_bus;
  int slack_count = 0;
  for (const auto& b : n.buses) {
    if (!seen_bus.insert(b.id).second) add("duplicate bus id: " + b.id);
    if (b.is_slack) ++slack_count;
    if (b.demand_mw < 0.0) add("negative demand: " + b.id);
    if (b.gen_capacity_mw < 0.0) add("negative generation capacity: " + b.id);
    if (b.gen_setpoint_mw < 0.0) add("negative generation setpoint: " + b.id);
    if (b.gen_setpoint_mw > b.gen_capacity_mw)
      add("setpoint exceeds capacity: " + b.id);
  }
  if (slack_count == 0) add("no slack bus");
  if (slack_count > 1) add("multiple slack buses");

  std::set<std::string> seen_line;
  for (const auto& l : n.lines) {
    if (!seen_line.insert(l.id).second) add("duplicate line id: " + l.id);
    if (l.reactance_pu <= 0.0) add("nonpositive reactance: " + l.id);
    if (l.resistance_pu < 0.0) add("negative resistance: " + l.id);
    if (l.capacity_mw <= 0.0) add("nonpositive capacity: " + l.id);
    if (l.from_bus == l.to_bus) add("self loop: " + l.id);
    if (n.bus_index(l.from_bus) < 0)
      add("unknown bus: " + l.from_bus + " (line " + l.id + ")");
    if (n.bus_index(l.to_bus) < 0)
      add("unknown bus: " + l.to_bus + " (line " + l.id + ")");
  }

  if (!n.buses.empty()) {
    std::vector<char> reach(n.buses.size(), 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& l : n.lines) {
        int a = n.bus_index(l.from_bus), b = n.bus_index(l.to_bus);
        if (a < 0 || b < 0) continue;
        int v = -1;
        if (a == u) v = b;
        if (b == u) v = a;
        if (v >= 0 && !reach[v]) {
          reach[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (size_t i = 0; i < n.buses.size(); ++i)
      if (!reach[i]) add("disconnected: " + n.buses[i].id);
  }
  return rep;
}

std::string_view case_name(CaseVariant v) {
  switch (v) {
    case CaseVariant::case1: return "case1";
    case CaseVariant::case2: return "case2";
    case CaseVariant::case3: return "case3";
  }
  return "case?";
}

Network apply_case_variant(const Network& n, CaseVariant v) {
  Network out = n;
  auto derate = [&out](const std::string& id, double cap) {
    int k = out.line_index(id);
    if (k < 0) throw ParseError("case variant needs line " + id + ": not present");
    out.lines[k].capacity_mw = cap;
  };
  switch (v) {
    case CaseVariant::case1:
      break;
    case CaseVariant::case2:
      derate("T1", 25.0);
      break;
    case CaseVariant::case3:
      derate("T1", 25.0);
      derate("T2", 25.0);
      break;
  }
  return out;
}

}  // namespace adeq
