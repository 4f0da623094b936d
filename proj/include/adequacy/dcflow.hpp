#pragma once

#include <vector>

#include <Eigen/Dense>

#include "adequacy/model.hpp"

namespace adeq {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// angle_rad holds one entry per bus in document order; the slack angle
// is identically zero.
struct AngleSolution {
  std::vector<double> angle_rad;
};

// Signed flows per line in document order, positive from_bus -> to_bus.
// For a lossless solution from_flow == to_flow and loss_mw == 0.
struct FlowSolution {
  std::vector<double> from_flow_mw;
  std::vector<double> to_flow_mw;
  std::vector<double> loss_mw;
  double slack_injection_mw = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Susceptance matrix over the non-slack buses (document order with the
// slack row/column removed): diagonal sum of 1/x over incident lines,
// off-diagonal -sum of 1/x over lines joining the pair.
Eigen::MatrixXd build_reduced_susceptance(const Network& n);

// injections_pu: net injection per non-slack bus, document order,
// per-unit on base_mva. Throws SolveError when the system is singular.
AngleSolution solve_angles(const Network& n, const std::vector<double>& injections_pu);

// Line flows implied by a set of angles; slack injection is recovered
// from the local balance at the slack bus.
FlowSolution compute_line_flows(const Network& n, const AngleSolution& a);

// Lossless dispatch: non-slack buses inject setpoint - demand, the
// slack balances the system. Line limits are deliberately not
// enforced; overloads are the signal the adequacy stage consumes.
FlowSolution run_lossless_dispatch_flow(const Network& n);

}  // namespace adeq
