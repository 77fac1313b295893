#pragma once

#include <cstddef>
#include <string>

#include "hardy/monomial.hpp"
#include "hardy/rational.hpp"
#include "hardy/tower_poly.hpp"

namespace hardy {

/// Asymptotic relation between two germs.
enum class Relation { Less, Greater, Equivalent };  // ≺, ≻, ≍

struct Comparison {
  Relation relation = Relation::Equivalent;
  bool asymptotic_equiv = false;  // f ~ g
  int sign_left = 0;
  int sign_right = 0;
};

/// An element of the tower field: a quotient of two TowerPolys.
///
/// Canonical form: the monomial gcd of numerator and denominator is divided
/// out, a single-term denominator is folded into the numerator, the
/// denominator's leading coefficient is 1, and exact polynomial divisibility
/// between numerator and denominator is cancelled. Zero is 0/1.
///
/// Values are immutable; every operation returns a new element.
class TowerElem {
 public:
  TowerElem() : den_(Rational(1)) {}
  TowerElem(const Rational& c);  // NOLINT(google-explicit-constructor)
  TowerElem(long c) : TowerElem(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit TowerElem(const Monomial& m, const Rational& c = Rational(1));
  explicit TowerElem(TowerPoly num);
  TowerElem(TowerPoly num, TowerPoly den);

  /// l_k; l_0 is x.
  static TowerElem ell(std::size_t k) { return TowerElem(Monomial::ell(k)); }
  static TowerElem x() { return ell(0); }

  const TowerPoly& num() const noexcept { return num_; }
  const TowerPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// c * m for a single monomial m (denominator 1 and one term).
  bool is_single_term() const { return num_.is_single_term() && den_.is_constant(); }

  /// Largest tower index occurring in numerator or denominator.
  std::size_t depth() const;

  /// Dominant monomial and coefficient: f ~ leading_coeff * leading_monomial.
  /// Requires f != 0.
  Monomial leading_monomial() const;
  Rational leading_coeff() const;

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  /// Throws DivisionByZero.
  friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
  TowerElem operator-() const;

  TowerElem& operator+=(const TowerElem& b) { return *this = *this + b; }
  TowerElem& operator-=(const TowerElem& b) { return *this = *this - b; }
  TowerElem& operator*=(const TowerElem& b) { return *this = *this * b; }
  TowerElem& operator/=(const TowerElem& b) { return *this = *this / b; }

  /// Exact equality (cross-multiplication, so unreduced fractions compare
  /// correctly).
  friend bool operator==(const TowerElem& a, const TowerElem& b);

  std::string to_string() const;

 private:
  void canonicalize();

  TowerPoly num_;
  TowerPoly den_;
};

TowerElem inverse(const TowerElem& f);

/// f^q. Integer q: repeated multiplication (f != 0 when q < 0). Non-integer q:
/// f must be c*m with c > 0 and c^q rational.
/// Throws DivisionByZero, NonMonomialPower, IrrationalCoefficientPower.
TowerElem pow(const TowerElem& f, const Rational& q);

/// Exact derivative d/dx.
TowerElem derive(const TowerElem& f);

/// Logarithmic derivative f'/f; f must be nonzero.
TowerElem log_derivative(const TowerElem& f);

/// Eventual sign at +infinity: -1, 0 or +1.
int sign_at_infinity(const TowerElem& f);

Comparison compare(const TowerElem& f, const TowerElem& g);

/// f∘log: every l_k becomes l_{k+1}.
TowerElem shift_up(const TowerElem& f);

/// f∘exp: every l_{k+1} becomes l_k. Throws NotShiftable if l0 occurs.
TowerElem shift_down(const TowerElem& f);
bool shiftable_down(const TowerElem& f);

/// log of a pure monomial prod l_k^e_k, i.e. sum_k e_k l_{k+1}.
/// Throws NonMonomialLog for any other argument.
TowerElem log_of(const TowerElem& f);

}  // namespace hardy
