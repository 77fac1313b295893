#include "hardy/numeric/checks.hpp"

#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy::numeric {

WronskianReport wronskian_check(const SolutionPair& pair) {
  WronskianReport r;
  const auto& a = pair.y1.samples.front();
  const auto& b = pair.y2.samples.front();
  r.w0 = a.y * b.yp - a.yp * b.y;
  r.drift = pair.wronskian_drift;
  r.tolerance = 100.0 * pair.y1.rtol;
  r.within_tolerance = r.drift <= r.tolerance;
  return r;
}

bool gronwall_check(const Evaluator& q, double c, const Trajectory& traj) {
  if (traj.samples.empty()) return true;
  const Sample& first = traj.samples.front();
  if (first.t < 1.0) {
    throw Error(ErrorCode::HypothesisViolated, "the growth bound needs t0 >= 1");
  }
  // Rounding in q(t) t^2 for q = c/t^2 itself.
  const double q_slack = 1e-12;
  for (const auto& s : traj.samples) {
    const double qt2 = std::abs(q.evaluate(s.t)) * s.t * s.t;
    if (qt2 > c * (1.0 + q_slack)) {
      throw Error(ErrorCode::HypothesisViolated,
                  "|q(t)| t^2 = " + std::to_string(qt2) + " > " + std::to_string(c) + " at t = " +
                      std::to_string(s.t));
    }
  }
  const double c1 = first.y - first.t * first.yp;
  const double c2 = first.yp;
  const double big_c = std::abs(c1) + std::abs(c2);
  const double slack = 1.0 + 10.0 * traj.rtol;
  for (const auto& s : traj.samples) {
    const double tc = std::pow(s.t, c);
    if (std::abs(s.y) > big_c * tc * s.t * slack + traj.atol) return false;
    if (std::abs(s.yp) > big_c * tc * slack + traj.atol) return false;
  }
  return true;
}

}  // namespace hardy::numeric
