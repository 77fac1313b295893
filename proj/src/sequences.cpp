#include "hardy/sequences.hpp"

#include <mutex>
#include <vector>

#include "hardy/error.hpp"

namespace hardy::seq {

namespace {

struct Rows {
  std::vector<TowerElem> gamma;
  std::vector<TowerElem> lambda;
  std::vector<TowerElem> omega;
};

// Extends the cached rows through index n and returns a copy of the
// requested entry while holding the lock.
template <typename Pick>
TowerElem cached(std::size_t n, Pick pick) {
  static std::mutex mutex;
  static Rows rows;
  std::lock_guard lock(mutex);
  while (rows.gamma.size() <= n) {
    const std::size_t k = rows.gamma.size();
    std::vector<Rational> e(k + 1, Rational(-1));
    TowerElem g(Monomial(std::move(e)));
    TowerElem g2 = g * g;
    if (k == 0) {
      rows.lambda.push_back(g);
      rows.omega.push_back(g2);
    } else {
      rows.lambda.push_back(rows.lambda.back() + g);
      rows.omega.push_back(rows.omega.back() + g2);
    }
    rows.gamma.push_back(std::move(g));
  }
  return pick(rows)[n];
}

}  // namespace

TowerElem ell(std::size_t n) { return TowerElem::ell(n); }

TowerElem gamma(std::size_t n) {
  return cached(n, [](const Rows& r) -> const std::vector<TowerElem>& { return r.gamma; });
}

TowerElem lambda(std::size_t n) {
  return cached(n, [](const Rows& r) -> const std::vector<TowerElem>& { return r.lambda; });
}

TowerElem omega(std::size_t n) {
  return cached(n, [](const Rows& r) -> const std::vector<TowerElem>& { return r.omega; });
}

TowerElem sigma_gamma(std::size_t n) {
  const TowerElem g = gamma(n);
  return omega(n) + g * g;
}

SequenceTable table_row(std::size_t n) {
  return SequenceTable{n, ell(n), gamma(n), lambda(n), omega(n), sigma_gamma(n)};
}

TowerElem omega_map(const TowerElem& z) { return TowerElem(-2) * derive(z) - z * z; }

TowerElem sigma_map(const TowerElem& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "sigma is undefined at 0");
  return omega_map(-log_derivative(y)) + y * y;
}

bool riccati_check(const TowerElem& z, const TowerElem& f) {
  return (derive(z) + z * z + f).is_zero();
}

bool integral_diverges(const TowerElem& u) {
  if (sign_at_infinity(u) != 1) {
    throw Error(ErrorCode::NotEventuallyPositive, u.to_string() + " is not eventually positive");
  }
  const Monomial m = u.leading_monomial();
  for (std::size_t k = 0;; ++k) {
    const Rational e = m.exponent(k);
    if (e != -1) return e > -1;
  }
}

}  // namespace hardy::seq
