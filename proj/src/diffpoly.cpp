#include "hardy/diffpoly.hpp"

#include <algorithm>

#include "hardy/error.hpp"

namespace hardy {

namespace {

MultiIndex unit_index(std::size_t k, unsigned power = 1) {
  MultiIndex idx(k + 1, 0u);
  idx[k] = power;
  return idx;
}

MultiIndex padded(MultiIndex idx, std::size_t len) {
  if (idx.size() < len) idx.resize(len, 0u);
  return idx;
}

std::string prime_var(std::size_t k) { return "Y" + std::string(k, '\''); }

std::string log_var(std::size_t k) { return "Y<" + std::to_string(k) + ">"; }

template <typename VarName>
std::string render_index(const MultiIndex& idx, VarName var) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += var(k);
    if (idx[k] != 1) out += "^" + std::to_string(idx[k]);
  }
  return out;
}

bool renders_negative(const TowerElem& c) { return c.is_single_term() && sign_at_infinity(c) < 0; }

std::string render_coeff_term(const TowerElem& c, const std::string& vars) {
  if (vars.empty()) return c.to_string();
  if (c == TowerElem(1)) return vars;
  if (c == TowerElem(-1)) return "-" + vars;
  if (c.is_single_term()) return c.to_string() + "*" + vars;
  return "(" + c.to_string() + ")*" + vars;
}

template <typename VarName>
std::string render_poly(const SparsePoly<TowerElem>& p, VarName var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : p.terms()) {
    const std::string vars = render_index(idx, var);
    if (first) {
      out += render_coeff_term(c, vars);
      first = false;
    } else if (renders_negative(c)) {
      out += " - " + render_coeff_term(-c, vars);
    } else {
      out += " + " + render_coeff_term(c, vars);
    }
  }
  return out;
}

// Formal derivative of the indeterminates only: Y^(k) -> Y^(k+1).
SparsePoly<TowerElem> formal_derive_vars(const SparsePoly<TowerElem>& p) {
  SparsePoly<TowerElem> out;
  for (const auto& [idx, c] : p.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] == 0) continue;
      MultiIndex next = padded(idx, k + 2);
      next[k] -= 1;
      next[k + 1] += 1;
      out.add_term(std::move(next), c * TowerElem(static_cast<long>(idx[k])));
    }
  }
  return out;
}

// Derivation on Z[Y<0>, Y<1>, ...] with Y<k>' = Y<k> Y<k+1>.
SparsePoly<Rational> log_derive(const SparsePoly<Rational>& p) {
  SparsePoly<Rational> out;
  for (const auto& [idx, c] : p.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] == 0) continue;
      MultiIndex next = padded(idx, k + 2);
      next[k + 1] += 1;
      out.add_term(std::move(next), Rational(c * idx[k]));
    }
  }
  return out;
}

// P with each Y^(k) replaced by images[k].
SparsePoly<TowerElem> substitute(const DiffPoly& p, const std::vector<SparsePoly<TowerElem>>& images) {
  SparsePoly<TowerElem> out;
  for (const auto& [idx, c] : p.terms()) {
    SparsePoly<TowerElem> term = SparsePoly<TowerElem>::monomial({}, c);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] != 0) term = term * images[k].pow(idx[k]);
    }
    out += term;
  }
  return out;
}

}  // namespace

DiffPoly DiffPoly::Y(std::size_t k) {
  if (k > kMaxDiffOrder) {
    throw Error(ErrorCode::OrderTooLarge, "derivative order " + std::to_string(k) + " exceeds " +
                                              std::to_string(kMaxDiffOrder));
  }
  return DiffPoly(SparsePoly<TowerElem>::monomial(unit_index(k), TowerElem(1)));
}

DiffPoly DiffPoly::constant(const TowerElem& c) {
  return DiffPoly(SparsePoly<TowerElem>::monomial({}, c));
}

std::string DiffPoly::to_string() const { return render_poly(poly_, prime_var); }

DiffPoly linear_operator(const TowerElem& f) {
  return TowerElem(4) * DiffPoly::Y(2) + f * DiffPoly::Y(0);
}

LogDecomp::LogDecomp(SparsePoly<TowerElem> poly) : poly_(std::move(poly)) {
  if (!poly_.is_zero()) dominant_ = poly_.terms().begin()->first;
}

std::string LogDecomp::to_string() const { return render_poly(poly_, log_var); }

IterLogDerivs iter_log_derivs(const TowerElem& y, std::size_t n) {
  IterLogDerivs out{y, {y}};
  while (out.values.size() <= n && !out.values.back().is_zero()) {
    out.values.push_back(log_derivative(out.values.back()));
  }
  if (out.values.size() > n + 1) out.values.resize(n + 1);
  return out;
}

LogDecomp to_log_decomposition(const DiffPoly& p) {
  const std::size_t r = p.order();
  // Y^(m) as an integer polynomial in Y<0>, ..., Y<m>.
  std::vector<SparsePoly<Rational>> derivs;
  derivs.push_back(SparsePoly<Rational>::monomial(unit_index(0), Rational(1)));
  for (std::size_t m = 0; m < r; ++m) derivs.push_back(log_derive(derivs.back()));

  SparsePoly<TowerElem> out;
  for (const auto& [idx, c] : p.terms()) {
    SparsePoly<Rational> prod = SparsePoly<Rational>::monomial({}, Rational(1));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] != 0) prod = prod * derivs[k].pow(idx[k]);
    }
    for (const auto& [lidx, lc] : prod.terms()) out.add_term(lidx, c * TowerElem(lc));
  }
  return LogDecomp(std::move(out));
}

TowerElem eval_diffpoly(const DiffPoly& p, const TowerElem& y, const TowerElem& scale) {
  const std::size_t r = p.order();
  std::vector<TowerElem> derivs{y};
  for (std::size_t k = 0; k < r; ++k) derivs.push_back(derive(derivs.back()) / scale);
  TowerElem out;
  for (const auto& [idx, c] : p.terms()) {
    TowerElem term = c;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] != 0) term *= pow(derivs[k], Rational(idx[k]));
    }
    out += term;
  }
  return out;
}

TowerElem eval_logdecomp(const LogDecomp& d, const TowerElem& y) {
  const std::size_t r = d.order();
  const IterLogDerivs ld = iter_log_derivs(y, r);
  // Y<k> is needed for every k <= r that actually occurs; y<r> must exist.
  if (ld.values.size() <= r) {
    throw Error(ErrorCode::UndefinedIterLogDeriv,
                "y<" + std::to_string(ld.values.size()) + "> is undefined for y = " + y.to_string());
  }
  // One common denominator prod_k den(y<k>)^max_k times the distinct
  // coefficient denominators; multiplying fractions pairwise swells them.
  std::vector<unsigned> top(r + 1, 0u);
  std::vector<TowerPoly> coeff_dens;
  for (const auto& [idx, c] : d.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) top[k] = std::max(top[k], idx[k]);
    if (!c.den().is_constant() &&
        std::find(coeff_dens.begin(), coeff_dens.end(), c.den()) == coeff_dens.end()) {
      coeff_dens.push_back(c.den());
    }
  }
  // num_pow[k][e] = num(y<k>)^e, den_pow[k][e] = den(y<k>)^e
  std::vector<std::vector<TowerPoly>> num_pow(r + 1);
  std::vector<std::vector<TowerPoly>> den_pow(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    num_pow[k].push_back(TowerPoly(Rational(1)));
    den_pow[k].push_back(TowerPoly(Rational(1)));
    for (unsigned e = 0; e < top[k]; ++e) {
      num_pow[k].push_back(num_pow[k].back() * ld.values[k].num());
      den_pow[k].push_back(den_pow[k].back() * ld.values[k].den());
    }
  }
  TowerPoly denom(Rational(1));
  for (std::size_t k = 0; k <= r; ++k) denom = denom * den_pow[k][top[k]];
  for (const auto& cd : coeff_dens) denom = denom * cd;
  TowerPoly numer;
  for (const auto& [idx, c] : d.terms()) {
    TowerPoly term = c.num();
    for (const auto& cd : coeff_dens) {
      if (!(cd == c.den())) term = term * cd;
    }
    if (c.den().is_constant()) term = term.scaled(Rational(1) / c.den().leading_coeff());
    for (std::size_t k = 0; k <= r; ++k) {
      const unsigned e = k < idx.size() ? idx[k] : 0u;
      term = term * num_pow[k][e] * den_pow[k][top[k] - e];
    }
    numer += term;
  }
  if (numer.is_zero()) return {};
  return TowerElem(std::move(numer), std::move(denom));
}

DiffPoly mult_conjugate(const DiffPoly& p, const TowerElem& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "multiplicative conjugation by 0");
  const std::size_t r = p.order();
  std::vector<TowerElem> gd{g};
  for (std::size_t k = 0; k < r; ++k) gd.push_back(derive(gd.back()));
  // (gY)^(n) = sum_k C(n,k) g^(n-k) Y^(k)
  std::vector<SparsePoly<TowerElem>> images;
  for (std::size_t n = 0; n <= r; ++n) {
    SparsePoly<TowerElem> img;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      img.add_term(unit_index(k), TowerElem(Rational(binom)) * gd[n - k]);
      binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
    images.push_back(std::move(img));
  }
  return DiffPoly(substitute(p, images));
}

DiffPoly comp_conjugate(const DiffPoly& p, const TowerElem& phi, const TowerElem& base_scale) {
  if (phi.is_zero()) throw Error(ErrorCode::DivisionByZero, "compositional conjugation by 0");
  const std::size_t r = p.order();
  // image(Y^(n+1)) = phi * delta(image(Y^(n))) with delta = (1/phi) d_base.
  std::vector<SparsePoly<TowerElem>> images;
  images.push_back(SparsePoly<TowerElem>::monomial(unit_index(0), TowerElem(1)));
  for (std::size_t n = 0; n < r; ++n) {
    const auto& prev = images.back();
    SparsePoly<TowerElem> coeff_part;
    for (const auto& [idx, c] : prev.terms()) coeff_part.add_term(idx, derive(c) / base_scale);
    images.push_back(coeff_part + formal_derive_vars(prev).scaled(phi));
  }
  return DiffPoly(substitute(p, images));
}

ChvarResult chvar_reduce(const TowerElem& f, const TowerElem& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "gauge factor g = 0");
  const TowerElem g2 = derive(derive(g));
  return ChvarResult{pow(g, Rational(3)) * (TowerElem(4) * g2 + f * g), pow(g, Rational(-2))};
}

DominantSign dominant_sign_at_large_argument(const LogDecomp& d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero differential polynomial");
  const MultiIndex& j = d.dominant_index();
  DominantSign out;
  out.index = padded(j, d.order() + 1);
  out.coeff = d.terms().begin()->second;
  out.sign = sign_at_infinity(out.coeff);
  const unsigned j0 = j.empty() ? 0u : j[0];
  out.sign_negative = (j0 % 2 == 0) ? out.sign : -out.sign;
  return out;
}

}  // namespace hardy
