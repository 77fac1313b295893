#include "hardy/tower_elem.hpp"

#include <algorithm>

#include "hardy/error.hpp"

namespace hardy {

TowerElem::TowerElem(const Rational& c) : num_(c), den_(Rational(1)) {}

TowerElem::TowerElem(const Monomial& m, const Rational& c) : num_(m, c), den_(Rational(1)) {}

TowerElem::TowerElem(TowerPoly num) : num_(std::move(num)), den_(Rational(1)) {}

TowerElem::TowerElem(TowerPoly num, TowerPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void TowerElem::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = TowerPoly(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    if (den_.leading_coeff() != 1) {
      num_ = num_.scaled(Rational(1) / den_.leading_coeff());
      den_ = TowerPoly(Rational(1));
    }
    return;
  }
  for (int pass = 0; pass < 2; ++pass) {
    const Monomial g = Monomial::min(num_.monomial_gcd(), den_.monomial_gcd());
    if (!g.is_one()) {
      const Monomial inv = g.inverse();
      num_ = num_.times(inv);
      den_ = den_.times(inv);
    }
    if (den_.is_single_term()) {
      const auto& [m, c] = *den_.terms().begin();
      num_ = num_.times(m.inverse(), Rational(1) / c);
      den_ = TowerPoly(Rational(1));
      return;
    }
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = TowerPoly(Rational(1));
      return;
    }
    if (pass == 0) {
      if (auto q = den_.divide_exact(num_)) {
        den_ = std::move(*q);
        num_ = TowerPoly(Rational(1));
        continue;
      }
    }
    break;
  }
  const Rational lc = den_.leading_coeff();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::size_t TowerElem::depth() const { return std::max(num_.depth(), den_.depth()); }

Monomial TowerElem::leading_monomial() const {
  return num_.leading_monomial() / den_.leading_monomial();
}

Rational TowerElem::leading_coeff() const { return num_.leading_coeff() / den_.leading_coeff(); }

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return TowerElem(a.num_ + b.num_, a.den_);
  return TowerElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return TowerElem(a.num_ * b.num_, a.den_ * b.den_);
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero germ");
  if (a.is_zero()) return {};
  return TowerElem(a.num_ * b.den_, a.den_ * b.num_);
}

TowerElem TowerElem::operator-() const {
  TowerElem out = *this;
  out.num_ = -num_;
  return out;
}

bool operator==(const TowerElem& a, const TowerElem& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string TowerElem::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

TowerElem inverse(const TowerElem& f) { return TowerElem(1) / f; }

namespace {

TowerElem int_power(TowerElem base, mpz_class e) {
  TowerElem result(1);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace

TowerElem pow(const TowerElem& f, const Rational& q) {
  if (is_integer(q)) {
    if (sgn(q) >= 0) {
      if (f.is_single_term()) {
        const auto& [m, c] = *f.num().terms().begin();
        return TowerElem(m.pow(q), int_pow(c, q.get_num().get_si()));
      }
      return int_power(f, q.get_num());
    }
    if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return int_power(inverse(f), -q.get_num());
  }
  if (f.is_zero() && sgn(q) > 0) return {};
  if (!f.is_single_term()) {
    throw Error(ErrorCode::NonMonomialPower,
                "non-integer power " + to_string(q) + " of non-monomial " + f.to_string());
  }
  const auto& [m, c] = *f.num().terms().begin();
  if (sgn(c) <= 0) {
    throw Error(ErrorCode::NonMonomialPower, "non-integer power of a negative germ " + f.to_string());
  }
  auto root = exact_root(c, q.get_den().get_ui());
  if (!root) {
    throw Error(ErrorCode::IrrationalCoefficientPower,
                to_string(c) + "^" + to_string(q) + " is not rational");
  }
  return TowerElem(m.pow(q), int_pow(*root, q.get_num().get_si()));
}

TowerElem derive(const TowerElem& f) {
  if (f.is_zero()) return {};
  if (f.den().is_constant()) return TowerElem(f.num().derive());
  // (n/d)' = (n'd - nd')/d^2
  return TowerElem(f.num().derive() * f.den() - f.num() * f.den().derive(), f.den() * f.den());
}

TowerElem log_derivative(const TowerElem& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "logarithmic derivative of zero");
  if (f.is_single_term()) {
    // (c prod l_k^e_k)^† = sum_k e_k gamma_k
    TowerPoly out;
    const Monomial& m = f.num().leading_monomial();
    std::vector<Rational> e;
    for (std::size_t k = 0; k < m.exponents().size(); ++k) {
      e.emplace_back(-1);
      out.add_term(Monomial(e), m.exponents()[k]);
    }
    return TowerElem(std::move(out));
  }
  return derive(f) / f;
}

int sign_at_infinity(const TowerElem& f) {
  if (f.is_zero()) return 0;
  return sgn(f.num().leading_coeff()) * sgn(f.den().leading_coeff());
}

Comparison compare(const TowerElem& f, const TowerElem& g) {
  Comparison out;
  out.sign_left = sign_at_infinity(f);
  out.sign_right = sign_at_infinity(g);
  if (f.is_zero() && g.is_zero()) return out;
  if (f.is_zero()) {
    out.relation = Relation::Less;
    return out;
  }
  if (g.is_zero()) {
    out.relation = Relation::Greater;
    return out;
  }
  const auto order = f.leading_monomial() <=> g.leading_monomial();
  if (order < 0) {
    out.relation = Relation::Less;
  } else if (order > 0) {
    out.relation = Relation::Greater;
  } else {
    out.relation = Relation::Equivalent;
    out.asymptotic_equiv = f.leading_coeff() == g.leading_coeff();
  }
  return out;
}

TowerElem shift_up(const TowerElem& f) {
  return TowerElem(f.num().shifted_up(), f.den().shifted_up());
}

bool shiftable_down(const TowerElem& f) {
  return f.num().shiftable_down() && f.den().shiftable_down();
}

TowerElem shift_down(const TowerElem& f) {
  if (!shiftable_down(f)) {
    throw Error(ErrorCode::NotShiftable, f.to_string() + " involves x, so f(exp t) leaves the tower");
  }
  return TowerElem(f.num().shifted_down(), f.den().shifted_down());
}

TowerElem log_of(const TowerElem& f) {
  if (!f.is_single_term() || f.num().leading_coeff() != 1) {
    throw Error(ErrorCode::NonMonomialLog, "log(" + f.to_string() + ") is not in the tower field");
  }
  TowerPoly out;
  const Monomial& m = f.num().leading_monomial();
  for (std::size_t k = 0; k < m.exponents().size(); ++k) {
    out.add_term(Monomial::ell(k + 1), m.exponents()[k]);
  }
  return TowerElem(std::move(out));
}

}  // namespace hardy
