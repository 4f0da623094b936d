#pragma once

#include "adequacy/dcflow.hpp"

namespace adeq {

// Quadratic series loss in per-unit: r * f^2.
double line_loss(double resistance_pu, double flow_pu);

// Fixed-point lossy flow: solve lossless, charge each line's loss half
// to each terminal bus as extra demand, re-solve, repeat until the
// largest per-line loss change drops below tol_mw. The slack absorbs
// its own allocations through the balance. Reported flows satisfy
// from_flow - to_flow == loss_mw exactly; with all resistances zero the
// result is identical to run_lossless_dispatch_flow. On hitting
// max_iter the last iterate is returned with converged == false.
FlowSolution run_lossy_flow(const Network& n, double tol_mw = 1e-6, int max_iter = 50);

}  // namespace adeq
