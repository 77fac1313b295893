#include "hardy/oscillation.hpp"

#include <stdexcept>

#include "hardy/error.hpp"
#include "hardy/sequences.hpp"

namespace hardy {

namespace {

TowerElem gamma_sq(std::size_t n) {
  const TowerElem g = seq::gamma(n);
  return g * g;
}

}  // namespace

Verdict classify(const TowerElem& q) {
  Verdict v;
  v.normalized_input = TowerElem(4) * q;
  const TowerElem& f = v.normalized_input;
  const std::size_t depth = f.depth();
  v.depth_used = depth;

  const TowerElem h = f - seq::omega(depth);
  if (sign_at_infinity(h) <= 0) {
    v.oscillating = false;
    v.witness = Witness{Witness::Kind::UpperBound, depth, Rational(0)};
  } else if (compare(h / gamma_sq(depth), TowerElem(1)).relation == Relation::Less) {
    // h lives at depth <= N and is below gamma_N^2, hence below
    // gamma_{N+1}^2 = gamma_N^2 / l_{N+1}^2: f < omega_{N+1}.
    v.oscillating = false;
    v.witness = Witness{Witness::Kind::UpperBound, depth + 1, Rational(0)};
  } else {
    // gamma_0^2 > gamma_1^2 > ... and gamma_N^2 <= h, so the least n with
    // gamma_n^2 <= h exists and is at most N.
    std::size_t n = 0;
    Comparison cmp = compare(h, gamma_sq(0));
    while (cmp.relation == Relation::Less) {
      ++n;
      cmp = compare(h, gamma_sq(n));
    }
    Rational c(1);
    if (cmp.relation == Relation::Equivalent) {
      c = h.leading_coeff() / gamma_sq(n).leading_coeff() / 2;
    }
    v.oscillating = true;
    v.witness = Witness{Witness::Kind::LowerBound, n, c};
  }
  if (!verify_witness(q, v.witness)) {
    throw std::logic_error("classifier produced a witness that does not verify for " + q.to_string());
  }
  return v;
}

Verdict classify_general(const TowerElem& g, const TowerElem& h) {
  const TowerElem q = Rational(-1, 2) * derive(g) - Rational(1, 4) * g * g + h;
  return classify(q);
}

std::string_view to_string(FlwOutcome outcome) {
  return outcome == FlwOutcome::OscillatingByFLW ? "oscillating_by_flw" : "inconclusive";
}

FlwOutcome classify_selfadjoint(const TowerElem& f, const TowerElem& g) {
  const int s = sign_at_infinity(f);
  if (s == 0) throw Error(ErrorCode::NotEventuallySigned, "leading coefficient f must be nonzero");
  // (f y')' + g y = 0 and (-f y')' - g y = 0 have the same solutions.
  const TowerElem inv_f = inverse(TowerElem(s) * f);
  const TowerElem g_norm = TowerElem(s) * g;
  if (sign_at_infinity(g_norm) <= 0) return FlwOutcome::Inconclusive;
  if (seq::integral_diverges(inv_f) && seq::integral_diverges(g_norm)) {
    return FlwOutcome::OscillatingByFLW;
  }
  return FlwOutcome::Inconclusive;
}

TowerElem phi_down(const TowerElem& f) {
  const TowerElem x2 = pow(TowerElem::x(), Rational(2));
  return shift_down((f - seq::omega(0)) * x2);
}

bool verify_witness(const TowerElem& q, const Witness& w) {
  const TowerElem f = TowerElem(4) * q;
  if (w.kind == Witness::Kind::UpperBound) {
    return sign_at_infinity(f - seq::omega(w.n)) <= 0;
  }
  if (sgn(w.c) <= 0) return false;
  return sign_at_infinity(f - seq::omega(w.n) - TowerElem(w.c) * gamma_sq(w.n)) >= 0;
}

}  // namespace hardy
