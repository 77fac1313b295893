#pragma once

// Shared generators and reference implementations for the test binaries.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hardy/diffpoly.hpp"
#include "hardy/monomial.hpp"
#include "hardy/rational.hpp"
#include "hardy/sequences.hpp"
#include "hardy/tower_elem.hpp"
#include "hardy/tower_poly.hpp"

namespace testsupport {

using hardy::Monomial;
using hardy::Rational;
using hardy::TowerElem;
using hardy::TowerPoly;

/// n/d in lowest terms; mpq_class(n, d) alone does not reduce.
inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational small_rational(int max_num = 5, int max_den = 3) {
    int num = 0;
    while (num == 0) num = uniform(-max_num, max_num);
    return rat(num, uniform(1, max_den));
  }

  Rational exponent() {
    // Mostly integers, sometimes halves and thirds.
    const int kind = uniform(0, 9);
    if (kind < 7) return Rational(uniform(-2, 2));
    if (kind < 9) return rat(uniform(-3, 3), 2);
    return rat(uniform(-2, 2), 3);
  }

  Monomial monomial(std::size_t max_depth) {
    std::vector<Rational> e(max_depth + 1);
    for (auto& v : e) v = coin(0.6) ? exponent() : Rational(0);
    return Monomial(std::move(e));
  }

  TowerPoly poly(std::size_t max_depth, int max_terms) {
    TowerPoly p;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) p.add_term(monomial(max_depth), small_rational());
    if (p.is_zero()) p.add_term(monomial(max_depth), Rational(1));
    return p;
  }

  /// Random element; a non-monomial denominator with probability p_den.
  TowerElem elem(std::size_t max_depth = 3, int max_terms = 4, double p_den = 0.3) {
    TowerPoly num = poly(max_depth, max_terms);
    if (!coin(p_den)) return TowerElem(num);
    return TowerElem(num, poly(max_depth, 2));
  }

  TowerElem nonzero_elem(std::size_t max_depth = 3, int max_terms = 4, double p_den = 0.3) {
    for (;;) {
      TowerElem e = elem(max_depth, max_terms, p_den);
      if (!e.is_zero()) return e;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// l_0(t), ..., l_n(t) by repeated log.
inline std::vector<double> logs_at(double t, std::size_t n) {
  std::vector<double> l(n + 1);
  l[0] = t;
  for (std::size_t k = 1; k <= n; ++k) l[k] = std::log(l[k - 1]);
  return l;
}

/// Reference evaluation by plain pow on each factor; independent of the
/// library evaluator (which sums exponent-weighted logs).
inline double eval_poly(const TowerPoly& p, const std::vector<double>& l) {
  double s = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double v = c.get_d();
    const auto& e = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) v *= std::pow(l.at(k), e[k].get_d());
    }
    s += v;
  }
  return s;
}

inline double oracle_eval(const TowerElem& f, double t) {
  const std::size_t d = f.depth();
  const auto l = logs_at(t, d);
  return eval_poly(f.num(), l) / eval_poly(f.den(), l);
}

/// prod_k l_k^e_k built from raw exponents.
inline TowerElem mono(std::vector<Rational> exps, const Rational& c = Rational(1)) {
  return TowerElem(Monomial(std::move(exps)), c);
}

/// 1/(l_0 ... l_n), built from exponents only.
inline TowerElem gamma_ref(std::size_t n) { return mono(std::vector<Rational>(n + 1, Rational(-1))); }

/// sum_{k<=n} gamma_k^2, built from exponents only.
inline TowerElem omega_ref(std::size_t n) {
  TowerPoly p;
  for (std::size_t k = 0; k <= n; ++k) p.add_term(Monomial(std::vector<Rational>(k + 1, Rational(-2))), Rational(1));
  return TowerElem(p);
}

inline TowerElem lambda_ref(std::size_t n) {
  TowerPoly p;
  for (std::size_t k = 0; k <= n; ++k) p.add_term(Monomial(std::vector<Rational>(k + 1, Rational(-1))), Rational(1));
  return TowerElem(p);
}

/// The 25-germ monomial family used to certify equality of a differential
/// polynomial and its logarithmic decomposition: c * x^a * l1^b with a != 0,
/// so every iterated logarithmic derivative up to order 3 exists.
inline std::vector<TowerElem> monomial_family() {
  const Rational as[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
  const Rational bs[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2)};
  std::vector<TowerElem> out;
  int i = 0;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      const Rational c = (i % 2 == 0) ? Rational(1) : Rational(3, 2);
      out.push_back(mono({a, b}, c));
      ++i;
    }
  }
  return out;
}

/// Random differential polynomial of order <= max_order with up to
/// max_terms terms; coefficients are small elements of depth <= 1.
inline hardy::DiffPoly random_diffpoly(Gen& gen, std::size_t max_order, int max_terms = 4) {
  hardy::SparsePoly<TowerElem> p;
  const int n = gen.uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    hardy::MultiIndex idx(max_order + 1, 0u);
    for (auto& v : idx) v = gen.coin(0.5) ? static_cast<unsigned>(gen.uniform(0, 2)) : 0u;
    p.add_term(std::move(idx), gen.nonzero_elem(1, 2, 0.0));
  }
  if (p.is_zero()) p.add_term({1}, TowerElem(1));
  return hardy::DiffPoly(std::move(p));
}

/// q near the oscillation boundary: (omega_n + c gamma_m^2 + noise)/4.
inline TowerElem boundary_germ(Gen& gen) {
  const auto n = static_cast<std::size_t>(gen.uniform(0, 3));
  const auto m = static_cast<std::size_t>(gen.uniform(0, 3));
  TowerElem f = hardy::seq::omega(n) + TowerElem(gen.small_rational(3, 2)) * hardy::seq::gamma(m) * hardy::seq::gamma(m);
  if (gen.coin(0.5)) f += TowerElem(gen.small_rational()) * TowerElem(gen.monomial(3)) * hardy::seq::gamma(3) * hardy::seq::gamma(3);
  return f / TowerElem(4);
}

inline TowerElem any_germ(Gen& gen) {
  switch (gen.uniform(0, 2)) {
    case 0: return boundary_germ(gen);
    case 1: return gen.elem(2, 3, 0.2);
    default: return TowerElem(gen.small_rational()) * TowerElem(gen.monomial(2));
  }
}

}  // namespace testsupport
