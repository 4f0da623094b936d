#include "adequacy/loss.hpp"

#include <algorithm>
#include <cmath>

namespace adeq {

double line_loss(double resistance_pu, double flow_pu) {
  return resistance_pu * flow_pu * flow_pu;
}

FlowSolution run_lossy_flow(const Network& n, double tol_mw, int max_iter) {
  const int slack = n.slack_index();
  if (slack < 0) throw SolveError("no slack bus");
  const size_t nb = n.buses.size();
  const size_t nl = n.lines.size();

  std::vector<int> from_idx(nl), to_idx(nl);
  for (size_t k = 0; k < nl; ++k) {
    from_idx[k] = n.bus_index(n.lines[k].from_bus);
    to_idx[k] = n.bus_index(n.lines[k].to_bus);
    if (from_idx[k] < 0 || to_idx[k] < 0)
      throw SolveError("unknown bus in line " + n.lines[k].id);
  }

  std::vector<double> alloc(nl, 0.0);     // loss charged to terminals, MW
  std::vector<double> mid_mw(nl, 0.0);
  std::vector<double> loss_new(nl, 0.0);
  bool converged = false;
  int iterations = 0;

  for (int it = 1; it <= max_iter; ++it) {
    iterations = it;
    std::vector<double> extra(nb, 0.0);  // added demand per bus
    for (size_t k = 0; k < nl; ++k) {
      extra[from_idx[k]] += alloc[k] / 2.0;
      extra[to_idx[k]] += alloc[k] / 2.0;
    }
    std::vector<double> inj;
    inj.reserve(nb - 1);
    for (size_t i = 0; i < nb; ++i) {
      if (static_cast<int>(i) == slack) continue;
      inj.push_back((n.buses[i].gen_setpoint_mw - n.buses[i].demand_mw - extra[i]) /
                    n.base_mva);
    }
    const AngleSolution a = solve_angles(n, inj);

    double delta = 0.0;
    for (size_t k = 0; k < nl; ++k) {
      const double f_pu =
          (a.angle_rad[from_idx[k]] - a.angle_rad[to_idx[k]]) / n.lines[k].reactance_pu;
      mid_mw[k] = f_pu * n.base_mva;
      loss_new[k] = line_loss(n.lines[k].resistance_pu, f_pu) * n.base_mva;
      delta = std::max(delta, std::abs(loss_new[k] - alloc[k]));
    }
    alloc = loss_new;
    if (delta < tol_mw) {
      converged = true;
      break;
    }
  }

  FlowSolution f;
  f.from_flow_mw.resize(nl);
  f.to_flow_mw.resize(nl);
  f.loss_mw.resize(nl);
  for (size_t k = 0; k < nl; ++k) {
    f.from_flow_mw[k] = mid_mw[k] + loss_new[k] / 2.0;
    f.to_flow_mw[k] = mid_mw[k] - loss_new[k] / 2.0;
    // Stored as the exact difference of the reported endpoint flows.
    f.loss_mw[k] = f.from_flow_mw[k] - f.to_flow_mw[k];
  }

  double demand = 0.0;
  for (const auto& b : n.buses) demand += b.demand_mw;
  double setpoint = 0.0;
  for (const auto& b : n.buses)
    if (!b.is_slack) setpoint += b.gen_setpoint_mw;
  double loss_total = 0.0;
  for (size_t k = 0; k < nl; ++k) loss_total += loss_new[k];
  f.slack_injection_mw = (demand - setpoint) + loss_total;

  f.converged = converged;
  f.iterations = iterations;
  return f;
}

}  // namespace adeq
