#include "hardy/numeric/evaluator.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hardy/error.hpp"

namespace hardy::numeric {

double iterated_exp_one(std::size_t k) {
  double v = 1.0;
  for (std::size_t i = 0; i < k; ++i) v = std::exp(v);
  return v;
}

Evaluator Evaluator::compile(const TowerElem& f) {
  if (f.depth() > kMaxNumericDepth) {
    throw Error(ErrorCode::DepthTooLargeForNumerics,
                "depth " + std::to_string(f.depth()) + " exceeds " + std::to_string(kMaxNumericDepth) +
                    "; reduce with phi_down first");
  }
  Evaluator ev;
  ev.source_ = f;
  ev.depth_ = f.depth();
  ev.t_min_ = ev.depth_ == 0 ? 0.0 : iterated_exp_one(ev.depth_ - 1) * (1.0 + kDomainMargin);
  auto lower = [](const TowerPoly& p) {
    std::vector<Term> out;
    for (const auto& [m, c] : p.terms()) {
      Term t{c.get_d(), {}};
      for (const auto& e : m.exponents()) t.exps.push_back(e.get_d());
      out.push_back(std::move(t));
    }
    return out;
  };
  ev.num_ = lower(f.num());
  ev.den_ = lower(f.den());
  return ev;
}

double Evaluator::sum_terms(const std::vector<Term>& terms, const double* logs) {
  double s = 0.0;
  for (const auto& term : terms) {
    double e = 0.0;
    for (std::size_t k = 0; k < term.exps.size(); ++k) e += term.exps[k] * logs[k];
    s += term.coeff * std::exp(e);
  }
  return s;
}

double Evaluator::operator()(double t) const {
  // logs[k] = log l_k, with l_0 = t and l_{k+1} = log l_k.
  std::array<double, kMaxNumericDepth + 1> logs{};
  double ell = t;
  for (std::size_t k = 0; k <= depth_; ++k) {
    logs[k] = std::log(ell);
    ell = logs[k];
  }
  const double num = sum_terms(num_, logs.data());
  if (den_.size() == 1 && den_.front().exps.empty()) return num / den_.front().coeff;
  return num / sum_terms(den_, logs.data());
}

double Evaluator::evaluate(double t) const {
  if (!(t > t_min_)) {
    throw Error(ErrorCode::DomainError,
                "t = " + std::to_string(t) + " is not above t_min = " + std::to_string(t_min_));
  }
  const double v = (*this)(t);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::DomainError, "non-finite value of " + source_.to_string() + " at t = " +
                                            std::to_string(t));
  }
  return v;
}

}  // namespace hardy::numeric
