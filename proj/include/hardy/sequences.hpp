#pragma once

#include <cstddef>

#include "hardy/tower_elem.hpp"

/// The iterated-logarithm scale and the Riccati maps attached to it.
///
///   gamma_n  = 1/(l_0 ... l_n)          = l_n'/l_n
///   lambda_n = gamma_0 + ... + gamma_n   = -gamma_n'/gamma_n
///   omega_n  = gamma_0^2 + ... + gamma_n^2 = omega(lambda_n)
///
/// All constructors are memoized per index and safe to call concurrently.
namespace hardy::seq {

TowerElem ell(std::size_t n);
TowerElem gamma(std::size_t n);
TowerElem lambda(std::size_t n);
TowerElem omega(std::size_t n);
/// sigma(gamma_n) = omega_n + gamma_n^2.
TowerElem sigma_gamma(std::size_t n);

struct SequenceTable {
  std::size_t n = 0;
  TowerElem ell;
  TowerElem gamma;
  TowerElem lambda;
  TowerElem omega;
  TowerElem sigma_gamma;
};

SequenceTable table_row(std::size_t n);

/// omega(z) = -2z' - z^2.
TowerElem omega_map(const TowerElem& z);

/// sigma(y) = omega(-y^†) + y^2. Throws DivisionByZero for y = 0.
TowerElem sigma_map(const TowerElem& y);

/// True iff z' + z^2 + f = 0, i.e. z = y'/y for a solution of y'' + f y = 0.
bool riccati_check(const TowerElem& z, const TowerElem& f);

/// Whether the antiderivative of an eventually positive u is unbounded.
/// Decided on the dominant monomial prod l_k^e_k: the first k with
/// e_k != -1 must have e_k > -1. Throws NotEventuallyPositive.
bool integral_diverges(const TowerElem& u);

}  // namespace hardy::seq
