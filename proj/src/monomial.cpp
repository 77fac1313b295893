#include "hardy/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace hardy {

Monomial::Monomial(std::vector<Rational> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::ell(std::size_t k) {
  std::vector<Rational> e(k + 1, Rational(0));
  e[k] = 1;
  return Monomial(std::move(e));
}

Rational Monomial::exponent(std::size_t k) const {
  return k < exps_.size() ? exps_[k] : Rational(0);
}

void Monomial::trim() {
  while (!exps_.empty() && sgn(exps_.back()) == 0) exps_.pop_back();
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Rational> e(std::max(exps_.size(), other.exps_.size()), Rational(0));
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<Rational> e(std::max(exps_.size(), other.exps_.size()), Rational(0));
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(const Rational& q) const {
  std::vector<Rational> e = exps_;
  for (auto& x : e) x *= q;
  return Monomial(std::move(e));
}

Monomial Monomial::inverse() const { return pow(Rational(-1)); }

Monomial Monomial::shifted_up() const {
  if (exps_.empty()) return *this;
  std::vector<Rational> e;
  e.reserve(exps_.size() + 1);
  e.emplace_back(0);
  e.insert(e.end(), exps_.begin(), exps_.end());
  return Monomial(std::move(e));
}

Monomial Monomial::shifted_down() const {
  assert(sgn(exponent(0)) == 0);
  if (exps_.empty()) return *this;
  return Monomial(std::vector<Rational>(exps_.begin() + 1, exps_.end()));
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  std::vector<Rational> e(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.exponent(i), b.exponent(i));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    const Rational& e = exps_[k];
    if (sgn(e) == 0) continue;
    if (!out.empty()) out += '*';
    out += k == 0 ? std::string("x") : "l" + std::to_string(k);
    if (e == 1) continue;
    out += '^';
    if (is_integer(e)) {
      out += e.get_str();
    } else {
      out += '(' + e.get_str() + ')';
    }
  }
  return out;
}

}  // namespace hardy
