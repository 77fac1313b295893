#include "hardy/rational.hpp"

#include <cctype>

namespace hardy {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

namespace {

std::optional<mpz_class> exact_int_root(const mpz_class& z, unsigned long r) {
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), r) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned long r) {
  if (r == 0 || sgn(q) < 0) return std::nullopt;
  auto num = exact_int_root(q.get_num(), r);
  auto den = exact_int_root(q.get_den(), r);
  if (!num || !den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

Rational int_pow(const Rational& q, long e) {
  const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  Rational out = e < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

}  // namespace hardy
