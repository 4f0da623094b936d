#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "adequacy/dcflow.hpp"
#include "adequacy/mcmf.hpp"
#include "adequacy/model.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline adeq::Network load_fixture() {
  return adeq::parse_network(read_file(ADEQ_FIXTURE_PATH));
}

// Two buses joined by one line; demand at bus-2, slack at bus-1.
inline adeq::Network two_bus(double demand_mw, double x_pu, double r_pu,
                             double cap_mw = 1000.0) {
  adeq::Network n;
  n.buses.push_back({"bus-1", 0.0, demand_mw + 100.0, 0.0, true});
  n.buses.push_back({"bus-2", demand_mw, 0.0, 0.0, false});
  n.lines.push_back({"T1", "bus-1", "bus-2", x_pu, r_pu, cap_mw});
  return n;
}

// Triangle with unit reactances: slack bus-1, 100 MW demand at bus-2.
// Lines in document order: 1-2, 1-3, 3-2.
inline adeq::Network triangle(double cap12 = 1000.0) {
  adeq::Network n;
  n.buses.push_back({"bus-1", 0.0, 200.0, 0.0, true});
  n.buses.push_back({"bus-2", 100.0, 0.0, 0.0, false});
  n.buses.push_back({"bus-3", 0.0, 0.0, 0.0, false});
  n.lines.push_back({"T1", "bus-1", "bus-2", 1.0, 0.0, cap12});
  n.lines.push_back({"T2", "bus-1", "bus-3", 1.0, 0.0, 1000.0});
  n.lines.push_back({"T3", "bus-3", "bus-2", 1.0, 0.0, 1000.0});
  return n;
}

// Random connected network: a spanning tree plus a few extra lines,
// random demands, slack plus one extra generator. Capacities are set
// after a lossless solve to straddle the solved flows so congestion
// actually occurs in a controlled share of samples.
inline adeq::Network random_network(std::mt19937& rng, bool with_resistance) {
  const int nb = 3 + static_cast<int>(rng() % 8);
  adeq::Network n;
  double total_demand = 0.0;
  for (int i = 0; i < nb; ++i) {
    adeq::Bus b;
    b.id = "bus-" + std::to_string(i + 1);
    b.is_slack = i == 0;
    if (i > 0) {
      b.demand_mw = static_cast<double>(rng() % 10001) / 100.0;
      total_demand += b.demand_mw;
    }
    n.buses.push_back(std::move(b));
  }
  const int gen_bus = 1 + static_cast<int>(rng() % (nb - 1));
  n.buses[gen_bus].gen_setpoint_mw = static_cast<double>(rng() % 8001) / 100.0;
  n.buses[gen_bus].gen_capacity_mw = n.buses[gen_bus].gen_setpoint_mw + 20.0;
  n.buses[0].gen_capacity_mw = total_demand + 500.0;

  int line_no = 0;
  auto add_line = [&](int a, int b) {
    adeq::Line l;
    l.id = "T" + std::to_string(++line_no);
    l.from_bus = n.buses[a].id;
    l.to_bus = n.buses[b].id;
    l.reactance_pu = 0.02 + static_cast<double>(rng() % 281) / 1000.0;
    l.resistance_pu =
        with_resistance ? 0.001 + static_cast<double>(rng() % 50) / 1000.0 : 0.0;
    l.capacity_mw = 1e6;
    n.lines.push_back(std::move(l));
  };
  for (int i = 1; i < nb; ++i) add_line(static_cast<int>(rng() % i), i);
  const int extra = static_cast<int>(rng() % nb);
  for (int e = 0; e < extra; ++e) {
    const int a = static_cast<int>(rng() % nb);
    int b = static_cast<int>(rng() % (nb - 1));
    if (b >= a) ++b;
    add_line(a, b);
  }

  const adeq::FlowSolution f = adeq::run_lossless_dispatch_flow(n);
  for (size_t k = 0; k < n.lines.size(); ++k) {
    const double mag = std::abs(f.from_flow_mw[k]);
    if (mag < 1e-6) {
      n.lines[k].capacity_mw = 1.0;
    } else {
      const double scale = 0.6 + static_cast<double>(rng() % 101) / 100.0;
      // centi-MW grid, so max-flow arithmetic stays exact
      n.lines[k].capacity_mw =
          std::max(0.01, std::round(mag * scale * 100.0) / 100.0);
    }
  }
  return n;
}

// Random sparse digraph for max-flow testing; node 0 is the source,
// the last node the sink. Arc kinds are immaterial here.
inline adeq::FlowGraph random_flow_graph(std::mt19937& rng) {
  adeq::FlowGraph g;
  g.node_count = 4 + static_cast<int>(rng() % 9);
  g.source = 0;
  g.sink = g.node_count - 1;
  for (int v = 0; v < g.node_count; ++v) g.node_names.push_back("n" + std::to_string(v));
  const int arcs = g.node_count + static_cast<int>(rng() % (2 * g.node_count + 1));
  for (int k = 0; k < arcs; ++k) {
    adeq::Arc a;
    a.from = static_cast<int>(rng() % g.node_count);
    int to = static_cast<int>(rng() % (g.node_count - 1));
    if (to >= a.from) ++to;
    a.to = to;
    a.capacity_mw = static_cast<double>(rng() % 50001) / 100.0;
    a.kind = adeq::ArcKind::line_forward;
    a.label = "a" + std::to_string(k);
    g.arcs.push_back(std::move(a));
  }
  return g;
}

}  // namespace testutil
