#include "hardy/tower_poly.hpp"

#include <cassert>
#include <vector>

namespace hardy {

namespace {

// Long divisions whose quotient would need more terms than this are treated
// as inexact; the caller keeps the unreduced fraction.
constexpr std::size_t kMaxDivisionSteps = 4096;

}  // namespace

TowerPoly::TowerPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

TowerPoly::TowerPoly(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

bool TowerPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::size_t TowerPoly::depth() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.depth());
  return d;
}

Monomial TowerPoly::monomial_gcd() const {
  if (terms_.empty()) return Monomial();
  auto it = terms_.begin();
  Monomial g = it->first;
  for (++it; it != terms_.end(); ++it) g = Monomial::min(g, it->first);
  return g;
}

void TowerPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TowerPoly& TowerPoly::operator+=(const TowerPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TowerPoly& TowerPoly::operator-=(const TowerPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TowerPoly operator*(const TowerPoly& a, const TowerPoly& b) {
  TowerPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

TowerPoly TowerPoly::operator-() const {
  TowerPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TowerPoly TowerPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  TowerPoly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

TowerPoly TowerPoly::times(const Monomial& m, const Rational& c) const {
  TowerPoly out;
  if (sgn(c) == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

TowerPoly TowerPoly::derive() const {
  // (prod l_k^e_k)' = prod l_k^e_k * sum_k e_k / (l_0 ... l_k)
  TowerPoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<Rational> e = m.exponents();
    for (std::size_t k = 0; k < m.exponents().size(); ++k) {
      const Rational& ek = m.exponents()[k];
      e[k] -= 1;
      if (sgn(ek) != 0) out.add_term(Monomial(e), c * ek);
    }
  }
  return out;
}

TowerPoly TowerPoly::shifted_up() const {
  TowerPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted_up(), c);
  return out;
}

bool TowerPoly::shiftable_down() const {
  for (const auto& [m, c] : terms_) {
    if (sgn(m.exponent(0)) != 0) return false;
  }
  return true;
}

TowerPoly TowerPoly::shifted_down() const {
  assert(shiftable_down());
  TowerPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted_down(), c);
  return out;
}

std::optional<TowerPoly> TowerPoly::divide_exact(const TowerPoly& divisor) const {
  assert(!divisor.is_zero());
  if (is_zero()) return TowerPoly();
  if (divisor.is_single_term()) {
    const auto& [m, c] = *divisor.terms_.begin();
    return times(m.inverse(), Rational(1) / c);
  }
  // Lex order is compatible with multiplication, so an exact quotient has
  // trailing monomial trailing(this)/trailing(divisor); any candidate term
  // below that bound proves the division inexact.
  const Monomial floor = trailing_monomial() / divisor.trailing_monomial();
  // Per-variable exponent ranges add under multiplication, which boxes in
  // every quotient term.
  const std::size_t d = std::max(depth(), divisor.depth()) + 1;
  std::vector<Rational> lo(d);
  std::vector<Rational> hi(d);
  {
    const auto range = [d](const TowerPoly& p, std::vector<Rational>& mn, std::vector<Rational>& mx) {
      mn.assign(d, Rational(0));
      mx.assign(d, Rational(0));
      bool first = true;
      for (const auto& [m, c] : p.terms_) {
        for (std::size_t k = 0; k < d; ++k) {
          const Rational e = m.exponent(k);
          if (first || e < mn[k]) mn[k] = e;
          if (first || e > mx[k]) mx[k] = e;
        }
        first = false;
      }
    };
    std::vector<Rational> amin, amax, bmin, bmax;
    range(*this, amin, amax);
    range(divisor, bmin, bmax);
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = amin[k] - bmin[k];
      hi[k] = amax[k] - bmax[k];
      if (lo[k] > hi[k]) return std::nullopt;
    }
  }
  const auto in_box = [&](const Monomial& m) {
    if (m.depth() >= d) return false;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational e = m.exponent(k);
      if (e < lo[k] || e > hi[k]) return false;
    }
    return true;
  };
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_c = divisor.leading_coeff();
  TowerPoly rem = *this;
  TowerPoly quot;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step >= kMaxDivisionSteps) return std::nullopt;
    Monomial m = rem.leading_monomial() / lead;
    if (m < floor || !in_box(m)) return std::nullopt;
    Rational c = rem.leading_coeff() / lead_c;
    rem -= divisor.times(m, c);
    quot.add_term(m, c);
  }
  return quot;
}

std::string render_term(const Rational& c, const Monomial& m) {
  if (m.is_one()) return to_string(c);
  if (c == 1) return m.to_string();
  if (c == -1) return "-" + m.to_string();
  return to_string(c) + "*" + m.to_string();
}

std::string TowerPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      out += render_term(c, m);
      first = false;
    } else if (sgn(c) < 0) {
      out += " - " + render_term(-c, m);
    } else {
      out += " + " + render_term(c, m);
    }
  }
  return out;
}

}  // namespace hardy
