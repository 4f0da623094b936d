#include "adequacy/mcmf.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace adeq {

std::string_view arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::generation: return "generation";
    case ArcKind::load: return "load";
    case ArcKind::line_forward: return "line-forward";
    case ArcKind::line_reverse: return "line-reverse";
  }
  return "?";
}

FlowGraph build_flow_graph(const Network& n) {
  FlowGraph g;
  const int nb = static_cast<int>(n.buses.size());
  g.node_count = nb + 2;
  g.source = nb;
  g.sink = nb + 1;
  for (const auto& b : n.buses) g.node_names.push_back(b.id);
  g.node_names.push_back("S");
  g.node_names.push_back("L");

  for (int i = 0; i < nb; ++i)
    if (n.buses[i].gen_capacity_mw > 0.0)
      g.arcs.push_back({g.source, i, n.buses[i].gen_capacity_mw, ArcKind::generation,
                        n.buses[i].id});
  for (int i = 0; i < nb; ++i)
    if (n.buses[i].demand_mw > 0.0)
      g.arcs.push_back({i, g.sink, n.buses[i].demand_mw, ArcKind::load, n.buses[i].id});
  for (const auto& l : n.lines) {
    const int a = n.bus_index(l.from_bus);
    const int b = n.bus_index(l.to_bus);
    g.arcs.push_back({a, b, l.capacity_mw, ArcKind::line_forward, l.id});
    g.arcs.push_back({b, a, l.capacity_mw, ArcKind::line_reverse, l.id});
  }
  return g;
}

namespace {

constexpr double kCenti = 100.0;

int64_t to_centi(double mw) { return llround(mw * kCenti); }

struct Dinic {
  struct Edge {
    int to;
    int rev;
    int64_t cap;
  };
  std::vector<std::vector<Edge>> adj;
  std::vector<int> level, iter;

  explicit Dinic(int n) : adj(n), level(n), iter(n) {}

  void add_edge(int u, int v, int64_t cap) {
    adj[u].push_back({v, static_cast<int>(adj[v].size()), cap});
    adj[v].push_back({u, static_cast<int>(adj[u].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Edge& e : adj[u]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int64_t dfs(int u, int t, int64_t up) {
    if (u == t) return up;
    for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
      Edge& e = adj[u][i];
      if (e.cap <= 0 || level[e.to] != level[u] + 1) continue;
      int64_t d = dfs(e.to, t, std::min(up, e.cap));
      if (d > 0) {
        e.cap -= d;
        adj[e.to][e.rev].cap += d;
        return d;
      }
    }
    return 0;
  }

  int64_t run(int s, int t) {
    int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (int64_t d = dfs(s, t, INT64_MAX)) total += d;
    }
    return total;
  }
};

}  // namespace

MaxFlowResult max_flow(const FlowGraph& g) {
  Dinic net(g.node_count);
  std::vector<std::pair<int, int>> handle;  // (node, edge slot) per arc
  handle.reserve(g.arcs.size());
  for (const auto& a : g.arcs) {
    handle.emplace_back(a.from, static_cast<int>(net.adj[a.from].size()));
    net.add_edge(a.from, a.to, to_centi(a.capacity_mw));
  }

  const int64_t total = net.run(g.source, g.sink);

  MaxFlowResult r;
  r.max_flow_mw = static_cast<double>(total) / kCenti;
  r.per_arc_flow_mw.reserve(g.arcs.size());
  for (size_t k = 0; k < g.arcs.size(); ++k) {
    const auto [u, slot] = handle[k];
    const int64_t pushed = to_centi(g.arcs[k].capacity_mw) - net.adj[u][slot].cap;
    r.per_arc_flow_mw.push_back(static_cast<double>(pushed) / kCenti);
  }

  // Nodes still reachable in the residual graph sit on the source side
  // of a minimum cut.
  std::vector<char> side(g.node_count, 0);
  std::queue<int> q;
  side[g.source] = 1;
  q.push(g.source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const auto& e : net.adj[u]) {
      if (e.cap > 0 && !side[e.to]) {
        side[e.to] = 1;
        q.push(e.to);
      }
    }
  }
  int64_t cut = 0;
  for (size_t k = 0; k < g.arcs.size(); ++k) {
    if (side[g.arcs[k].from] && !side[g.arcs[k].to]) {
      r.min_cut_arcs.push_back(static_cast<int>(k));
      cut += to_centi(g.arcs[k].capacity_mw);
    }
  }
  if (cut != total) throw std::logic_error("max-flow/min-cut mismatch");
  return r;
}

double dns_mcmf(const Network& n, const MaxFlowResult& r) {
  int64_t demand = 0;
  for (const auto& b : n.buses) demand += to_centi(b.demand_mw);
  const int64_t flow = to_centi(r.max_flow_mw);
  return static_cast<double>(demand - flow) / kCenti;
}

double min_cut_enumeration_oracle(const FlowGraph& g) {
  if (g.node_count > 16)
    throw std::invalid_argument("graph too large for enumeration");

  std::vector<int> free_nodes;
  for (int v = 0; v < g.node_count; ++v)
    if (v != g.source && v != g.sink) free_nodes.push_back(v);

  std::vector<int64_t> caps;
  caps.reserve(g.arcs.size());
  for (const auto& a : g.arcs) caps.push_back(to_centi(a.capacity_mw));

  const size_t m = free_nodes.size();
  int64_t best = INT64_MAX;
  std::vector<char> side(g.node_count, 0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    std::fill(side.begin(), side.end(), 0);
    side[g.source] = 1;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i)) side[free_nodes[i]] = 1;
    int64_t cut = 0;
    for (size_t k = 0; k < g.arcs.size(); ++k)
      if (side[g.arcs[k].from] && !side[g.arcs[k].to]) {
        cut += caps[k];
        if (cut >= best) break;
      }
    best = std::min(best, cut);
  }
  return static_cast<double>(best) / kCenti;
}

}  // namespace adeq
