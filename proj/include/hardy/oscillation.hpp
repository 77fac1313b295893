#pragma once

#include <cstddef>
#include <string_view>

#include "hardy/rational.hpp"
#include "hardy/tower_elem.hpp"

namespace hardy {

/// Certificate for a verdict on Y'' + qY = 0, stated for f = 4q:
///  - UpperBound(n):    f <= omega_n eventually (non-oscillating);
///  - LowerBound(n, c): f >= omega_n + c*gamma_n^2 eventually, c > 0
///                      (oscillating).
struct Witness {
  enum class Kind { UpperBound, LowerBound };
  Kind kind = Kind::UpperBound;
  std::size_t n = 0;
  Rational c;  // LowerBound only
};

struct Verdict {
  bool oscillating = false;
  Witness witness;
  std::size_t depth_used = 0;
  TowerElem normalized_input;  // f = 4q
};

/// Decides whether y'' + q y = 0 has oscillating solutions, for any q in the
/// tower field. The returned witness always re-verifies.
Verdict classify(const TowerElem& q);

/// y'' + g y' + h y = 0, reduced to q = -g'/2 - g^2/4 + h.
Verdict classify_general(const TowerElem& g, const TowerElem& h);

enum class FlwOutcome { OscillatingByFLW, Inconclusive };

std::string_view to_string(FlwOutcome outcome);

/// Fite–Leighton–Wintner test for (f y')' + g y = 0: oscillating when both
/// integral 1/f and integral g diverge (after normalizing f > 0). One-sided:
/// failure is Inconclusive. Throws NotEventuallySigned for f = 0.
FlwOutcome classify_selfadjoint(const TowerElem& f, const TowerElem& g);

/// Conjugation by x -> log x acting on f in 4y'' + fy = 0:
/// ((f - omega_0) x^2)(exp t). Preserves the oscillation verdict.
/// Throws NotShiftable when the result would involve exp.
TowerElem phi_down(const TowerElem& f);

/// Checks the witness's eventual inequality for 4q by one exact sign test.
bool verify_witness(const TowerElem& q, const Witness& w);

}  // namespace hardy
