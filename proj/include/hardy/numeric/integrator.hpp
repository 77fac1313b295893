#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hardy/numeric/evaluator.hpp"

namespace hardy::numeric {

inline constexpr double kDefaultRtol = 1e-9;
inline constexpr double kDefaultAtol = 1e-12;
/// Zeros are refined by bisection until the bracket is this small relative to t.
inline constexpr double kZeroRelWidth = 1e-12;

struct Sample {
  double t;
  double y;
  double yp;
};

/// One numerically integrated solution of y'' + q y = 0.
struct Trajectory {
  double t0 = 0.0;
  double t1 = 0.0;  // last accepted time
  std::vector<Sample> samples;
  std::vector<double> zeros;  // zeros in (t0, t1], increasing
  double rtol = kDefaultRtol;
  double atol = kDefaultAtol;
  bool truncated = false;  // step budget ran out before the requested end
};

struct SolutionPair {
  Trajectory y1;
  Trajectory y2;
  double wronskian_drift = 0.0;  // max |w(t) - w(t0)| / |w(t0)|
};

struct InitialValue {
  double y;
  double yp;
};

struct StepperOptions {
  double rtol = kDefaultRtol;
  double atol = kDefaultAtol;
  std::size_t max_steps = 5'000'000;
  /// When positive, a solution whose |y| or |y'| exceeds this is rescaled by
  /// its inverse. Zeros are unaffected; sample values become piecewise scaled.
  double renormalize_above = 0.0;
};

/// Dormand–Prince 5(4) integration of several solutions of y'' + q y = 0 on
/// a shared adaptive grid, with proportional-integral step control and
/// bisection-refined zero tracking on the cubic Hermite interpolant.
class OdeStepper {
 public:
  /// Throws DomainError when t0 is not above q.t_min() or tolerances are not
  /// positive.
  OdeStepper(const Evaluator& q, double t0, std::vector<InitialValue> init, StepperOptions options);

  /// Called after every accepted step; returning false stops the integration.
  using Observer = std::function<bool(const OdeStepper&)>;

  enum class Status { ReachedEnd, Stopped, StepBudgetExhausted };

  /// Throws StepSizeUnderflow or DomainError.
  Status advance_to(double t_end, const Observer& observer = {});

  double t() const noexcept { return t_; }
  std::size_t solutions() const noexcept { return zeros_.size(); }
  double y(std::size_t i) const { return state_[2 * i]; }
  double yp(std::size_t i) const { return state_[2 * i + 1]; }
  const std::vector<double>& zeros(std::size_t i) const { return zeros_[i]; }
  std::size_t steps() const noexcept { return steps_; }

 private:
  void rhs(double t, const std::vector<double>& s, std::vector<double>& out) const;
  double initial_step(double t_end) const;
  void track_zeros(double ta, const std::vector<double>& sa, double tb, const std::vector<double>& sb);

  const Evaluator* q_;
  StepperOptions opt_;
  double t_;
  double h_ = 0.0;
  double err_old_ = 1e-4;
  std::size_t steps_ = 0;
  std::vector<double> state_;
  std::vector<double> k1_;  // derivative at (t_, state_), reused (FSAL)
  std::vector<std::vector<double>> zeros_;
  std::vector<int> last_sign_;
};

/// Integrates y'' + q y = 0 from (t0, y0, y0p) to t1.
Trajectory integrate(const Evaluator& q, double t0, double t1, double y0, double y0p,
                     double rtol = kDefaultRtol, double atol = kDefaultAtol);

/// Two solutions on one grid; wronskian_drift is filled in.
SolutionPair integrate_pair(const Evaluator& q, double t0, double t1, InitialValue a, InitialValue b,
                            double rtol = kDefaultRtol, double atol = kDefaultAtol);

/// y2 = y1 * integral_{t0}^{t} ds / y1(s)^2 on y1's grid, by composite Simpson
/// over the accepted steps with Hermite midpoints. Throws ZeroInRange.
Trajectory second_solution(const Trajectory& y1);

/// Builds the pair and fills in wronskian_drift; grids must coincide.
SolutionPair make_pair(Trajectory y1, Trajectory y2);

/// Cubic Hermite interpolation between two samples.
double hermite(const Sample& a, const Sample& b, double t);

}  // namespace hardy::numeric
