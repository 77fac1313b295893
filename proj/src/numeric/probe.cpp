#include "hardy/numeric/probe.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardy/numeric/evaluator.hpp"
#include "hardy/numeric/integrator.hpp"

namespace hardy::numeric {

namespace {

// Solutions of non-oscillating equations may grow without bound; only their
// zeros matter here.
constexpr double kRenormalizeAbove = 1e100;

std::size_t zeros_after(const std::vector<double>& zeros, double t) {
  return static_cast<std::size_t>(zeros.end() - std::upper_bound(zeros.begin(), zeros.end(), t));
}

}  // namespace

double default_start(const Evaluator& q) { return std::max(10.0, 2.0 * q.t_min()); }

std::string_view to_string(Trend trend) {
  switch (trend) {
    case Trend::OscillatingTrend: return "oscillating_trend";
    case Trend::QuiescentTrend: return "quiescent_trend";
    case Trend::Ambiguous: return "ambiguous";
  }
  return "ambiguous";
}

ProbeResult numeric_oscillation_probe(const TowerElem& q, const ProbeWindow& window, const ProbeConfig& config) {
  const Evaluator ev = Evaluator::compile(q);
  ProbeResult result;
  result.t0 = window.t0 > 0 ? window.t0 : default_start(ev);
  const double t0 = result.t0;
  auto transient_end = [&](double t1) { return t0 * std::pow(t1 / t0, config.transient_fraction); };

  StepperOptions opt{config.rtol, config.atol, config.max_steps, kRenormalizeAbove};
  OdeStepper stepper(ev, t0, {{1.0, 0.0}, {0.0, 1.0}}, opt);

  // Deep germs have t_min beyond the default right end.
  double t1 = std::max(window.t1, t0 * window.extension_per_round);
  const double t1_limit = t1 * window.max_extension * (1.0 + 1e-12);
  for (;;) {
    const double thr = transient_end(t1);
    auto enough = [&](const OdeStepper& s) {
      return zeros_after(s.zeros(0), thr) >= config.min_zeros_oscillating &&
             zeros_after(s.zeros(1), thr) >= config.min_zeros_oscillating;
    };
    const auto status = stepper.advance_to(t1, [&](const OdeStepper& s) { return !enough(s); });
    if (status == OdeStepper::Status::StepBudgetExhausted) {
      result.step_budget_exhausted = true;
      t1 = stepper.t();
      break;
    }
    if (status == OdeStepper::Status::Stopped || enough(stepper)) break;
    if (t1 * window.extension_per_round > t1_limit) break;
    t1 *= window.extension_per_round;
  }

  result.t1 = t1;
  result.t_transient = transient_end(t1);
  result.zeros_first = zeros_after(stepper.zeros(0), result.t_transient);
  result.zeros_second = zeros_after(stepper.zeros(1), result.t_transient);
  const std::size_t lo = std::min(result.zeros_first, result.zeros_second);
  const std::size_t hi = std::max(result.zeros_first, result.zeros_second);
  if (lo >= config.min_zeros_oscillating) {
    result.trend = Trend::OscillatingTrend;
  } else if (hi <= config.max_zeros_quiescent) {
    result.trend = Trend::QuiescentTrend;
  } else {
    result.trend = Trend::Ambiguous;
  }
  return result;
}

}  // namespace hardy::numeric
