#include "adequacy/adequacy.hpp"

#include <algorithm>
#include <cmath>

namespace adeq {

std::vector<std::string> congested_lines(const Network& n, const FlowSolution& f,
                                         double eps_mw) {
  std::vector<std::string> out;
  for (size_t k = 0; k < n.lines.size(); ++k)
    if (std::abs(f.from_flow_mw[k]) > n.lines[k].capacity_mw + eps_mw)
      out.push_back(n.lines[k].id);
  return out;
}

double bus_diff(const Network& n, const FlowSolution& f, const Bus& bus) {
  const int s = n.bus_index(bus.id);
  double diff = bus.demand_mw;

  for (size_t k = 0; k < n.lines.size(); ++k) {
    const Line& l = n.lines[k];
    const bool at_from = n.bus_index(l.from_bus) == s;
    const bool at_to = n.bus_index(l.to_bus) == s;
    if (!at_from && !at_to) continue;

    // Direction follows the solved flow; the clipped magnitude is the
    // flow at this bus's end of the line.
    const double mid = 0.5 * (f.from_flow_mw[k] + f.to_flow_mw[k]);
    const bool forward = mid >= 0.0;
    const bool incoming = (at_to && forward) || (at_from && !forward);
    const double side = at_from ? std::abs(f.from_flow_mw[k]) : std::abs(f.to_flow_mw[k]);
    const double clipped = std::min(side, l.capacity_mw);
    diff += incoming ? -clipped : clipped;
  }

  const double gen = bus.is_slack ? f.slack_injection_mw : bus.gen_setpoint_mw;
  return diff - gen;
}

std::pair<double, double> classify_diff(double diff_mw) {
  if (diff_mw > 0.0) return {diff_mw, 0.0};
  if (diff_mw < 0.0) return {0.0, -diff_mw};
  return {0.0, 0.0};
}

double wheeling_loss(const Network& n, const FlowSolution& f, double eps_mw) {
  double wl = 0.0;
  for (size_t k = 0; k < n.lines.size(); ++k) {
    const double mag = std::abs(f.from_flow_mw[k]);
    if (mag > n.lines[k].capacity_mw + eps_mw) wl += mag - n.lines[k].capacity_mw;
  }
  return wl;
}

AdequacyReport aggregate_adequacy(const Network& n, const FlowSolution& f,
                                  double eps_mw) {
  AdequacyReport rep;
  rep.congested_line_ids = congested_lines(n, f, eps_mw);

  std::vector<char> bus_touched(n.buses.size(), 0);
  for (size_t k = 0; k < n.lines.size(); ++k) {
    if (std::abs(f.from_flow_mw[k]) > n.lines[k].capacity_mw + eps_mw) {
      bus_touched[n.bus_index(n.lines[k].from_bus)] = 1;
      bus_touched[n.bus_index(n.lines[k].to_bus)] = 1;
    }
  }

  for (size_t i = 0; i < n.buses.size(); ++i) {
    BusAdequacy ba;
    ba.bus_id = n.buses[i].id;
    ba.diff_mw = bus_touched[i] ? bus_diff(n, f, n.buses[i]) : 0.0;
    std::tie(ba.dns_mw, ba.gns_mw) = classify_diff(ba.diff_mw);
    rep.dns_total_mw += ba.dns_mw;
    rep.gns_total_mw += ba.gns_mw;
    rep.per_bus.push_back(std::move(ba));
  }
  rep.wheeling_loss_mw = wheeling_loss(n, f, eps_mw);
  return rep;
}

}  // namespace adeq
