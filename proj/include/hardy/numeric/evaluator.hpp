#pragma once

#include <cstddef>
#include <vector>

#include "hardy/tower_elem.hpp"

namespace hardy::numeric {

/// Deepest tower level the floating-point layer accepts.
inline constexpr std::size_t kMaxNumericDepth = 3;

/// Relative margin kept above the point where the deepest logarithm vanishes.
inline constexpr double kDomainMargin = 1e-6;

/// A tower germ compiled to a double-precision function of t.
///
/// Each term c * prod l_k^e_k is evaluated as c * exp(sum_k e_k log l_k),
/// which needs l_0, ..., l_depth > 0, i.e. t > exp_{depth-1}(1).
class Evaluator {
 public:
  /// Throws DepthTooLargeForNumerics for depth > kMaxNumericDepth.
  static Evaluator compile(const TowerElem& f);

  /// Value at t; throws DomainError for t <= t_min() or a non-finite result.
  double evaluate(double t) const;
  /// Same as evaluate() without the domain check.
  double operator()(double t) const;

  const TowerElem& source() const noexcept { return source_; }
  std::size_t depth() const noexcept { return depth_; }
  double t_min() const noexcept { return t_min_; }

 private:
  struct Term {
    double coeff;
    std::vector<double> exps;
  };

  static double sum_terms(const std::vector<Term>& terms, const double* logs);

  TowerElem source_;
  std::size_t depth_ = 0;
  double t_min_ = 0.0;
  std::vector<Term> num_;
  std::vector<Term> den_;
};

/// exp(exp(...exp(1))) with k exponentials; exp_0(1) = 1.
double iterated_exp_one(std::size_t k);

}  // namespace hardy::numeric
