#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hardy/tower_elem.hpp"

namespace hardy {

/// Exponent vector over a list of differential indeterminates, with trailing
/// zeros trimmed. Compared lexicographically; for trimmed vectors this agrees
/// with the zero-padded lexicographic order.
using MultiIndex = std::vector<unsigned>;

inline constexpr std::size_t kMaxDiffOrder = 8;

/// Sparse polynomial with coefficients in C, terms ordered by decreasing
/// multi-index. Zero coefficients are never stored.
template <typename C>
class SparsePoly {
 public:
  using TermMap = std::map<MultiIndex, C, std::greater<>>;

  SparsePoly() = default;

  static SparsePoly monomial(MultiIndex idx, C c) {
    SparsePoly p;
    p.add_term(std::move(idx), std::move(c));
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Length of the longest multi-index minus one (0 for constants).
  std::size_t order() const {
    std::size_t r = 0;
    for (const auto& [idx, c] : terms_) r = std::max(r, idx.empty() ? 0 : idx.size() - 1);
    return r;
  }

  void add_term(MultiIndex idx, C c) {
    while (!idx.empty() && idx.back() == 0) idx.pop_back();
    if (c == C(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
    if (!inserted) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, C(0) - c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ia, ca] : a.terms_) {
      for (const auto& [ib, cb] : b.terms_) {
        MultiIndex idx(std::max(ia.size(), ib.size()), 0u);
        for (std::size_t k = 0; k < ia.size(); ++k) idx[k] += ia[k];
        for (std::size_t k = 0; k < ib.size(); ++k) idx[k] += ib[k];
        out.add_term(std::move(idx), ca * cb);
      }
    }
    return out;
  }

  SparsePoly scaled(const C& s) const {
    SparsePoly out;
    for (const auto& [idx, c] : terms_) out.add_term(idx, c * s);
    return out;
  }

  SparsePoly pow(unsigned e) const {
    SparsePoly out = SparsePoly::monomial({}, C(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  template <typename F>
  auto map_coeffs(F f) const {
    SparsePoly<decltype(f(std::declval<const C&>()))> out;
    for (const auto& [idx, c] : terms_) out.add_term(idx, f(c));
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Differential polynomial in standard form: sum of P_i * Y^i0 (Y')^i1 ...
/// with coefficients in the tower field.
class DiffPoly {
 public:
  DiffPoly() = default;
  explicit DiffPoly(SparsePoly<TowerElem> poly) : poly_(std::move(poly)) {}

  /// The indeterminate Y^(k). Throws OrderTooLarge for k > kMaxDiffOrder.
  static DiffPoly Y(std::size_t k = 0);
  static DiffPoly constant(const TowerElem& c);

  const SparsePoly<TowerElem>& poly() const noexcept { return poly_; }
  const auto& terms() const noexcept { return poly_.terms(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  std::size_t order() const { return poly_.order(); }

  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.poly_ + b.poly_); }
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.poly_ - b.poly_); }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.poly_ * b.poly_); }
  friend DiffPoly operator*(const TowerElem& c, const DiffPoly& p) { return DiffPoly(p.poly_.scaled(c)); }
  DiffPoly pow(unsigned e) const { return DiffPoly(poly_.pow(e)); }

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.poly_ == b.poly_; }

  /// e.g. "2*Y^3 + Y'*Y''".
  std::string to_string() const;

 private:
  SparsePoly<TowerElem> poly_;
};

/// 4Y'' + fY.
DiffPoly linear_operator(const TowerElem& f);

/// Differential polynomial in the iterated logarithmic derivatives
/// Y<0> = Y, Y<k+1> = (Y<k>)'/Y<k>.
class LogDecomp {
 public:
  LogDecomp() = default;
  explicit LogDecomp(SparsePoly<TowerElem> poly);

  const SparsePoly<TowerElem>& poly() const noexcept { return poly_; }
  const auto& terms() const noexcept { return poly_.terms(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  std::size_t order() const { return poly_.order(); }

  /// Lexicographically maximal index with nonzero coefficient (cached).
  /// Requires a nonzero decomposition.
  const MultiIndex& dominant_index() const { return dominant_; }

  /// e.g. "2*Y<0>^3 + Y<0>^2*Y<1>^3".
  std::string to_string() const;

 private:
  SparsePoly<TowerElem> poly_;
  MultiIndex dominant_;
};

/// y<0>, ..., y<n>; stops early at the first zero entry.
struct IterLogDerivs {
  TowerElem base;
  std::vector<TowerElem> values;
};

IterLogDerivs iter_log_derivs(const TowerElem& y, std::size_t n);

LogDecomp to_log_decomposition(const DiffPoly& p);

/// P(y) where Y^(k) is read as the k-th derivative for the derivation
/// (1/scale) d/dx; scale = 1 is the ordinary derivative.
TowerElem eval_diffpoly(const DiffPoly& p, const TowerElem& y, const TowerElem& scale = TowerElem(1));

/// sum_i P<i> y<i>. Throws UndefinedIterLogDeriv when y<r> does not exist.
TowerElem eval_logdecomp(const LogDecomp& d, const TowerElem& y);

/// P(gY). Throws DivisionByZero for g = 0.
DiffPoly mult_conjugate(const DiffPoly& p, const TowerElem& g);

/// P^phi: the same operator written in the derivation (1/phi) d_base, where
/// d_base = (1/base_scale) d/dx is the derivation P is expressed in.
/// Throws DivisionByZero for phi = 0.
DiffPoly comp_conjugate(const DiffPoly& p, const TowerElem& phi,
                        const TowerElem& base_scale = TowerElem(1));

struct ChvarResult {
  TowerElem q;    // g^3 (4g'' + f g)
  TowerElem phi;  // g^-2
};

/// Gauge change for 4Y'' + fY: with phi = g^-2,
/// g^3 (4Y'' + fY)^phi_{×g} = 4Y'' + qY.
ChvarResult chvar_reduce(const TowerElem& f, const TowerElem& g);

struct DominantSign {
  MultiIndex index;   // j, zero-padded to order + 1
  TowerElem coeff;    // P<j>
  int sign = 0;       // sign of P(y) for all large enough y > 0
  int sign_negative = 0;  // sign of P(-y) for the same y
};

/// Throws ZeroPolynomial.
DominantSign dominant_sign_at_large_argument(const LogDecomp& d);

}  // namespace hardy
