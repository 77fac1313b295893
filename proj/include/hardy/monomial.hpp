#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hardy/rational.hpp"

namespace hardy {

/// A product l0^e0 * l1^e1 * ... * lN^eN of iterated logarithms with
/// rational exponents. Trailing zero exponents are never stored, so two
/// monomials are equal iff their exponent vectors are.
///
/// The order is lexicographic on exponent vectors (missing entries read as
/// zero): a larger l0 exponent dominates, then l1, and so on. This is the
/// asymptotic dominance order because l_{k+1} is eventually below every
/// positive power of l_k.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Rational> exponents);

  /// The single generator l_k.
  static Monomial ell(std::size_t k);

  const std::vector<Rational>& exponents() const noexcept { return exps_; }

  /// Exponent of l_k (zero past the stored range).
  Rational exponent(std::size_t k) const;

  /// Largest index with nonzero exponent; 0 for the unit monomial.
  std::size_t depth() const noexcept { return exps_.empty() ? 0 : exps_.size() - 1; }

  bool is_one() const noexcept { return exps_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial pow(const Rational& q) const;
  Monomial inverse() const;

  /// Composition with log: l_k -> l_{k+1}.
  Monomial shifted_up() const;
  /// Composition with exp; requires exponent(0) == 0.
  Monomial shifted_down() const;

  /// Coordinatewise minimum (zero-padded).
  static Monomial min(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  /// Canonical text, e.g. "x^2*l1^(1/2)*l2^-1"; the unit monomial renders as "1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> exps_;
};

}  // namespace hardy
