#pragma once

#include "hardy/numeric/evaluator.hpp"
#include "hardy/numeric/integrator.hpp"

namespace hardy::numeric {

struct WronskianReport {
  double w0 = 0.0;
  double drift = 0.0;      // max |w(t) - w0| / |w0| over the grid
  double tolerance = 0.0;  // 100 * rtol
  bool within_tolerance = false;
};

/// The Wronskian y1 y2' - y1' y2 of two solutions is constant; reports how far
/// the numerical pair strays from that.
WronskianReport wronskian_check(const SolutionPair& pair);

/// Growth bound for |q(t)| <= c / t^2 on t >= t0 >= 1: with c1 = y(t0) - t0 y'(t0)
/// and c2 = y'(t0), C = |c1| + |c2| gives |y| <= C t^(c+1) and |y'| <= C t^c.
/// Returns whether every sample satisfies both (up to the trajectory's own
/// relative tolerance). Throws HypothesisViolated if t0 < 1 or the bound on q
/// fails at some sample.
bool gronwall_check(const Evaluator& q, double c, const Trajectory& traj);

}  // namespace hardy::numeric
