#pragma once

#include <cstddef>
#include <string_view>

#include "hardy/numeric/evaluator.hpp"
#include "hardy/tower_elem.hpp"

namespace hardy::numeric {

enum class Trend { OscillatingTrend, QuiescentTrend, Ambiguous };

std::string_view to_string(Trend trend);

/// Heuristic thresholds of the oscillation probe. A finite window can never
/// prove oscillation, so these are tuning constants, not criteria.
struct ProbeConfig {
  std::size_t min_zeros_oscillating = 5;
  std::size_t max_zeros_quiescent = 1;
  /// Leading part of the window (in log t) whose zeros are ignored.
  double transient_fraction = 1.0 / 3.0;
  double rtol = 1e-9;
  double atol = 1e-12;
  /// Accepted steps across all extension rounds.
  std::size_t max_steps = 2'000'000;
};

/// max(10, 2 t_min): clear of the singular layer near t_min.
double default_start(const Evaluator& q);

struct ProbeWindow {
  double t0 = 0.0;  // 0 selects default_start
  double t1 = 1e6;
  /// The right end grows by this factor per round while the answer is not
  /// yet OscillatingTrend, up to t1 * max_extension.
  double extension_per_round = 1e3;
  double max_extension = 1e24;
};

struct ProbeResult {
  Trend trend = Trend::Ambiguous;
  double t0 = 0.0;
  double t1 = 0.0;         // right end actually used
  double t_transient = 0.0;  // zeros before this are ignored
  std::size_t zeros_first = 0;   // after the transient, solution with (1, 0)
  std::size_t zeros_second = 0;  // after the transient, solution with (0, 1)
  bool step_budget_exhausted = false;
};

/// Integrates two independent solutions of y'' + q y = 0 and reports whether
/// both keep producing zeros (OscillatingTrend), both stay essentially free of
/// zeros (QuiescentTrend), or neither. Throws DepthTooLargeForNumerics for
/// depth(q) > 3; reduce deeper inputs with phi_down first.
ProbeResult numeric_oscillation_probe(const TowerElem& q, const ProbeWindow& window = {},
                                      const ProbeConfig& config = {});

}  // namespace hardy::numeric
