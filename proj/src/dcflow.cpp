#include "adequacy/dcflow.hpp"

#include <cmath>

namespace adeq {

namespace {

// Map bus index -> row in the reduced system (-1 for the slack).
std::vector<int> reduced_index(const Network& n, int slack) {
  std::vector<int> idx(n.buses.size(), -1);
  int next = 0;
  for (size_t i = 0; i < n.buses.size(); ++i) {
    if (static_cast<int>(i) == slack) continue;
    idx[i] = next++;
  }
  return idx;
}

int checked_slack(const Network& n) {
  int slack = n.slack_index();
  if (slack < 0) throw SolveError("no slack bus");
  return slack;
}

double total_demand(const Network& n) {
  double d = 0.0;
  for (const auto& b : n.buses) d += b.demand_mw;
  return d;
}

double total_nonslack_setpoint(const Network& n) {
  double g = 0.0;
  for (const auto& b : n.buses)
    if (!b.is_slack) g += b.gen_setpoint_mw;
  return g;
}

}  // namespace

Eigen::MatrixXd build_reduced_susceptance(const Network& n) {
  const int slack = checked_slack(n);
  const auto idx = reduced_index(n, slack);
  const int m = static_cast<int>(n.buses.size()) - 1;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
  for (const auto& l : n.lines) {
    const int a = n.bus_index(l.from_bus);
    const int b = n.bus_index(l.to_bus);
    if (a < 0 || b < 0) throw SolveError("unknown bus in line " + l.id);
    const double y = 1.0 / l.reactance_pu;
    if (idx[a] >= 0) B(idx[a], idx[a]) += y;
    if (idx[b] >= 0) B(idx[b], idx[b]) += y;
    if (idx[a] >= 0 && idx[b] >= 0) {
      B(idx[a], idx[b]) -= y;
      B(idx[b], idx[a]) -= y;
    }
  }
  return B;
}

AngleSolution solve_angles(const Network& n, const std::vector<double>& injections_pu) {
  const int slack = checked_slack(n);
  const int m = static_cast<int>(n.buses.size()) - 1;
  if (static_cast<int>(injections_pu.size()) != m)
    throw SolveError("injection vector size mismatch");

  const Eigen::MatrixXd B = build_reduced_susceptance(n);
  Eigen::VectorXd p(m);
  for (int i = 0; i < m; ++i) p(i) = injections_pu[i];

  Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
  if (!lu.isInvertible()) throw SolveError("singular susceptance matrix");
  const Eigen::VectorXd theta = lu.solve(p);
  if ((B * theta - p).lpNorm<Eigen::Infinity>() >= 1e-9)
    throw SolveError("ill-conditioned susceptance matrix");

  AngleSolution a;
  a.angle_rad.assign(n.buses.size(), 0.0);
  const auto idx = reduced_index(n, slack);
  for (size_t i = 0; i < n.buses.size(); ++i)
    if (idx[i] >= 0) a.angle_rad[i] = theta(idx[i]);
  return a;
}

FlowSolution compute_line_flows(const Network& n, const AngleSolution& a) {
  const int slack = checked_slack(n);
  FlowSolution f;
  f.from_flow_mw.reserve(n.lines.size());
  for (const auto& l : n.lines) {
    const int i = n.bus_index(l.from_bus);
    const int j = n.bus_index(l.to_bus);
    if (i < 0 || j < 0) throw SolveError("unknown bus in line " + l.id);
    const double mw = (a.angle_rad[i] - a.angle_rad[j]) / l.reactance_pu * n.base_mva;
    f.from_flow_mw.push_back(mw);
  }
  f.to_flow_mw = f.from_flow_mw;
  f.loss_mw.assign(n.lines.size(), 0.0);

  double inj = n.buses[slack].demand_mw;
  for (size_t k = 0; k < n.lines.size(); ++k) {
    if (n.bus_index(n.lines[k].from_bus) == slack) inj += f.from_flow_mw[k];
    if (n.bus_index(n.lines[k].to_bus) == slack) inj -= f.to_flow_mw[k];
  }
  f.slack_injection_mw = inj;
  f.converged = true;
  f.iterations = 1;
  return f;
}

FlowSolution run_lossless_dispatch_flow(const Network& n) {
  const int slack = checked_slack(n);
  std::vector<double> inj;
  inj.reserve(n.buses.size() - 1);
  for (size_t i = 0; i < n.buses.size(); ++i) {
    if (static_cast<int>(i) == slack) continue;
    inj.push_back((n.buses[i].gen_setpoint_mw - n.buses[i].demand_mw) / n.base_mva);
  }
  FlowSolution f = compute_line_flows(n, solve_angles(n, inj));
  f.slack_injection_mw = total_demand(n) - total_nonslack_setpoint(n);
  return f;
}

}  // namespace adeq
