#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hardy/monomial.hpp"
#include "hardy/rational.hpp"

namespace hardy {

/// Finite sum of rational multiples of monomials in the iterated logarithms.
/// Terms are kept in decreasing monomial order, so the first term is the
/// dominant one at +infinity. No zero coefficient is ever stored.
class TowerPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  TowerPoly() = default;
  TowerPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit TowerPoly(const Monomial& m, const Rational& c = Rational(1));

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_single_term() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;

  /// Dominant (lexicographically greatest) monomial; poly must be nonzero.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }
  /// Smallest monomial; poly must be nonzero.
  const Monomial& trailing_monomial() const { return terms_.rbegin()->first; }

  std::size_t depth() const;

  /// Coordinatewise minimum of all monomials (including the zero-exponent
  /// entries of shorter vectors).
  Monomial monomial_gcd() const;

  TowerPoly& operator+=(const TowerPoly& other);
  TowerPoly& operator-=(const TowerPoly& other);
  void add_term(const Monomial& m, const Rational& c);

  friend TowerPoly operator+(TowerPoly a, const TowerPoly& b) { return a += b; }
  friend TowerPoly operator-(TowerPoly a, const TowerPoly& b) { return a -= b; }
  friend TowerPoly operator*(const TowerPoly& a, const TowerPoly& b);
  TowerPoly operator-() const;

  TowerPoly scaled(const Rational& c) const;
  TowerPoly times(const Monomial& m, const Rational& c = Rational(1)) const;

  /// Exact derivative; monomials differentiate to sums of monomials.
  TowerPoly derive() const;

  TowerPoly shifted_up() const;
  /// Requires every monomial to have zero l0 exponent.
  TowerPoly shifted_down() const;
  bool shiftable_down() const;

  /// Returns q with q * divisor == *this when such a finite q exists and is
  /// found within the step budget; nullopt otherwise.
  std::optional<TowerPoly> divide_exact(const TowerPoly& divisor) const;

  friend bool operator==(const TowerPoly& a, const TowerPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Renders a single term c*m the way TowerPoly::to_string does.
std::string render_term(const Rational& c, const Monomial& m);

}  // namespace hardy
