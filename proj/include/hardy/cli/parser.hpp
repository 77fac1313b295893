#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hardy/diffpoly.hpp"
#include "hardy/error.hpp"
#include "hardy/rational.hpp"
#include "hardy/tower_elem.hpp"

namespace hardy::cli {

enum class SeqKind { Gamma, Lambda, Omega, SigmaGamma };

/// Parse tree for tower expressions and differential polynomials.
struct Expr {
  enum class Kind {
    Rational,  // value
    Var,       // x
    TowerRef,  // l<index>
    Log,       // log(children[0])
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,     // children[0] ^ value
    SeqRef,  // seq(index)
    YDeriv,  // Y with `index` primes; differential polynomials only
  };

  Kind kind = Kind::Rational;
  Rational value;
  std::size_t index = 0;
  SeqKind seq = SeqKind::Gamma;
  std::vector<Expr> children;
  Span span;
};

/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-'? factor
///   factor := base ('^' exponent)?
///   exponent := '-'? number | '(' '-'? number ('/' number)? ')'
///   base   := number | 'x' | 'l' nat | 'log' '(' expr ')'
///           | ('gamma' | 'omega' | 'lambda' | 'sigma_gamma') '(' nat ')'
///           | '(' expr ')'
/// Decimal numbers are read as exact rationals. With allow_y, `Y`, `Y'`,
/// `Y''`, ... are also bases. Throws SourceError(SyntaxError).
Expr parse(std::string_view input, bool allow_y = false);

/// Evaluates a Y-free tree in the tower field. Errors from the algebra
/// (NonMonomialLog, NonMonomialPower, DivisionByZero, ...) are rethrown as
/// SourceError carrying the span of the offending node.
TowerElem lower(const Expr& expr);

/// Evaluates a tree with Y-derivatives into a differential polynomial.
DiffPoly lower_diffpoly(const Expr& expr);

/// parse + lower.
TowerElem parse_tower(std::string_view input);
DiffPoly parse_diffpoly(std::string_view input);

}  // namespace hardy::cli
