#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hardy {

/// Arbitrary-precision exact rational, always kept canonical.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses an unsigned decimal literal such as "12", "0.25" or "3.". Returns
/// nullopt if the text is not of that form.
std::optional<Rational> parse_decimal(std::string_view text);

/// Exact r-th root of a non-negative rational, when it exists.
std::optional<Rational> exact_root(const Rational& q, unsigned long r);

/// q^e for a machine-size integer e; q must be nonzero when e < 0.
Rational int_pow(const Rational& q, long e);

}  // namespace hardy
