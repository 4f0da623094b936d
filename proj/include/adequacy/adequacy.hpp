#pragma once

#include <utility>

#include "adequacy/dcflow.hpp"

namespace adeq {

struct BusAdequacy {
  std::string bus_id;
  double diff_mw = 0.0;
  double dns_mw = 0.0;
  double gns_mw = 0.0;
};

struct AdequacyReport {
  std::vector<BusAdequacy> per_bus;  // document order
  double dns_total_mw = 0.0;
  double gns_total_mw = 0.0;
  double wheeling_loss_mw = 0.0;
  std::vector<std::string> congested_line_ids;  // document order
};

// A line is congested when |from_flow| exceeds capacity by more than
// eps_mw.
std::vector<std::string> congested_lines(const Network& n, const FlowSolution& f,
                                         double eps_mw);

// Per-bus imbalance: demand minus capacity-clipped inflow plus
// capacity-clipped outflow minus dispatched generation. Direction
// (in/out) follows the sign of the solved flow; the clipped magnitude
// is the flow at this bus's end of the line. The slack's generation is
// its balanced injection.
double bus_diff(const Network& n, const FlowSolution& f, const Bus& bus);

// Splits an imbalance into (demand not served, generation not served).
std::pair<double, double> classify_diff(double diff_mw);

// Sum of |from_flow| - capacity over congested lines.
double wheeling_loss(const Network& n, const FlowSolution& f, double eps_mw);

// Full evaluation. Buses with no congested incident line score zero by
// definition; on an uncongested network the report is all zeros either
// way because clipping never engages.
AdequacyReport aggregate_adequacy(const Network& n, const FlowSolution& f,
                                  double eps_mw);

}  // namespace adeq
