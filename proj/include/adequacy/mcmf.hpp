#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adequacy/model.hpp"

namespace adeq {

enum class ArcKind { generation, load, line_forward, line_reverse };

std::string_view arc_kind_name(ArcKind k);

struct Arc {
  int from = 0;
  int to = 0;
  double capacity_mw = 0.0;
  ArcKind kind = ArcKind::line_forward;
  std::string label;  // bus id for generation/load arcs, line id otherwise
};

struct FlowGraph {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<std::string> node_names;
  std::vector<Arc> arcs;
};

struct MaxFlowResult {
  double max_flow_mw = 0.0;
  std::vector<double> per_arc_flow_mw;  // parallel to FlowGraph::arcs
  std::vector<int> min_cut_arcs;        // arc indices crossing the cut
};

// Source node S feeds every bus with generation capacity; every bus
// with demand feeds the sink node L; each line contributes a pair of
// opposed arcs at full capacity.
FlowGraph build_flow_graph(const Network& n);

// Dinic's algorithm on integral centi-MW, so results are exact for
// capacities with at most two decimals.
MaxFlowResult max_flow(const FlowGraph& g);

// Total demand minus max flow.
double dns_mcmf(const Network& n, const MaxFlowResult& r);

// Exhaustive min-cut over all source/sink bipartitions; only for small
// graphs (at most 16 nodes).
double min_cut_enumeration_oracle(const FlowGraph& g);

}  // namespace adeq
