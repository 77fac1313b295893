#include "hardy/cli/parser.hpp"

#include <cctype>
#include <string>

#include "hardy/sequences.hpp"

namespace hardy::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view src, bool allow_y) : src_(src), allow_y_(allow_y) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail(pos_, pos_ + 1, "unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t b, std::size_t e, const std::string& msg) const {
    // Clamp into the input so callers can always underline something.
    if (src_.empty()) {
      b = e = 0;
    } else {
      if (b >= src_.size()) b = src_.size() - 1;
      if (e > src_.size()) e = src_.size();
      if (e <= b) e = b + 1;
    }
    throw SourceError(ErrorCode::SyntaxError, msg, Span{b, e});
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (accept(c)) return;
    if (pos_ >= src_.size()) fail(pos_, pos_ + 1, std::string("expected '") + c + "' but input ended");
    fail(pos_, pos_ + 1, std::string("expected '") + c + "'");
  }

  static Expr node(Expr::Kind kind, Span span) {
    Expr e;
    e.kind = kind;
    e.span = span;
    return e;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e = node(kind, Span{lhs.span.begin, rhs.span.end});
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('-')) {
      Expr inner = factor();
      Expr e = node(Expr::Kind::Neg, Span{start, inner.span.end});
      e.children.push_back(std::move(inner));
      return e;
    }
    return factor();
  }

  Expr factor() {
    Expr b = base();
    if (!accept('^')) return b;
    const std::size_t start = b.span.begin;
    Expr e = node(Expr::Kind::Pow, Span{start, 0});
    e.value = exponent();
    e.span.end = pos_;
    e.children.push_back(std::move(b));
    return e;
  }

  Rational exponent() {
    skip_ws();
    if (accept('(')) {
      const bool neg = accept('-');
      Rational v = number();
      if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        Rational d = number();
        if (d == 0) fail(at, pos_, "zero denominator in exponent");
        v /= d;
      }
      expect(')');
      return neg ? Rational(-v) : v;
    }
    const bool neg = accept('-');
    Rational v = number();
    return neg ? Rational(-v) : v;
  }

  Rational number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
    if (pos_ == start) {
      if (start >= src_.size()) fail(start, start + 1, "expected a number but input ended");
      fail(start, start + 1, "expected a number");
    }
    auto v = parse_decimal(src_.substr(start, pos_ - start));
    if (!v) fail(start, pos_, "malformed number");
    return *v;
  }

  std::size_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail(start, start + 1, "expected a natural number");
    if (pos_ - start > 6) fail(start, pos_, "index too large");
    return std::stoul(std::string(src_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr base() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail(pos_, pos_ + 1, "unexpected end of input");
    const char ch = src_[pos_];

    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      Expr e = node(Expr::Kind::Rational, Span{start, 0});
      e.value = number();
      e.span.end = pos_;
      return e;
    }
    if (ch == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      // Keep the parentheses in the span; errors then underline the group.
      inner.span = Span{start, pos_};
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail(start, start + 1, "unexpected '" + std::string(1, ch) + "'");

    const std::string id = identifier();
    if (id == "x") return node(Expr::Kind::Var, Span{start, pos_});
    if (id == "l") {
      Expr e = node(Expr::Kind::TowerRef, Span{start, 0});
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail(start, pos_, "expected an index after 'l'");
      }
      e.index = natural();
      e.span.end = pos_;
      if (e.index == 0) e.kind = Expr::Kind::Var;
      return e;
    }
    if (id == "Y") {
      if (!allow_y_) fail(start, pos_, "'Y' is only allowed in differential polynomials");
      Expr e = node(Expr::Kind::YDeriv, Span{start, 0});
      while (pos_ < src_.size() && src_[pos_] == '\'') {
        ++e.index;
        ++pos_;
      }
      e.span.end = pos_;
      if (e.index > kMaxDiffOrder) {
        throw SourceError(ErrorCode::OrderTooLarge, "derivative order exceeds " + std::to_string(kMaxDiffOrder),
                          e.span);
      }
      return e;
    }
    if (id == "log") {
      expect('(');
      Expr inner = expr();
      expect(')');
      Expr e = node(Expr::Kind::Log, Span{start, pos_});
      e.children.push_back(std::move(inner));
      return e;
    }
    SeqKind kind{};
    if (id == "gamma") {
      kind = SeqKind::Gamma;
    } else if (id == "lambda") {
      kind = SeqKind::Lambda;
    } else if (id == "omega") {
      kind = SeqKind::Omega;
    } else if (id == "sigma_gamma") {
      kind = SeqKind::SigmaGamma;
    } else {
      fail(start, pos_, "unknown identifier '" + id + "'");
    }
    expect('(');
    Expr e = node(Expr::Kind::SeqRef, Span{start, 0});
    e.seq = kind;
    e.index = natural();
    expect(')');
    e.span.end = pos_;
    return e;
  }

  std::string_view src_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

bool contains_y(const Expr& e) {
  if (e.kind == Expr::Kind::YDeriv) return true;
  for (const auto& c : e.children) {
    if (contains_y(c)) return true;
  }
  return false;
}

TowerElem lower_node(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Rational: return TowerElem(e.value);
    case K::Var: return TowerElem::x();
    case K::TowerRef: return TowerElem::ell(e.index);
    case K::Log: return log_of(lower(e.children[0]));
    case K::Add: return lower(e.children[0]) + lower(e.children[1]);
    case K::Sub: return lower(e.children[0]) - lower(e.children[1]);
    case K::Mul: return lower(e.children[0]) * lower(e.children[1]);
    case K::Div: return lower(e.children[0]) / lower(e.children[1]);
    case K::Neg: return -lower(e.children[0]);
    case K::Pow: return pow(lower(e.children[0]), e.value);
    case K::SeqRef:
      switch (e.seq) {
        case SeqKind::Gamma: return seq::gamma(e.index);
        case SeqKind::Lambda: return seq::lambda(e.index);
        case SeqKind::Omega: return seq::omega(e.index);
        case SeqKind::SigmaGamma: return seq::sigma_gamma(e.index);
      }
      break;
    case K::YDeriv:
      throw SourceError(ErrorCode::SyntaxError, "'Y' cannot appear in a tower expression", e.span);
  }
  throw SourceError(ErrorCode::SyntaxError, "malformed expression", e.span);
}

}  // namespace

Expr parse(std::string_view input, bool allow_y) { return Parser(input, allow_y).parse_all(); }

TowerElem lower(const Expr& expr) {
  try {
    return lower_node(expr);
  } catch (const SourceError&) {
    throw;
  } catch (const Error& err) {
    throw SourceError(err.code(), err.message(), expr.span);
  }
}

DiffPoly lower_diffpoly(const Expr& e) {
  using K = Expr::Kind;
  if (!contains_y(e)) return DiffPoly::constant(lower(e));
  switch (e.kind) {
    case K::YDeriv: return DiffPoly::Y(e.index);
    case K::Add: return lower_diffpoly(e.children[0]) + lower_diffpoly(e.children[1]);
    case K::Sub: return lower_diffpoly(e.children[0]) - lower_diffpoly(e.children[1]);
    case K::Mul: return lower_diffpoly(e.children[0]) * lower_diffpoly(e.children[1]);
    case K::Neg: return TowerElem(-1) * lower_diffpoly(e.children[0]);
    case K::Div:
      if (contains_y(e.children[1])) {
        throw SourceError(ErrorCode::SyntaxError, "'Y' cannot appear in a denominator", e.children[1].span);
      }
      return inverse(lower(e.children[1])) * lower_diffpoly(e.children[0]);
    case K::Pow:
      if (!is_integer(e.value) || sgn(e.value) < 0 || e.value > 64) {
        throw SourceError(ErrorCode::NonMonomialPower, "powers of Y must be natural numbers", e.span);
      }
      return lower_diffpoly(e.children[0]).pow(static_cast<unsigned>(e.value.get_num().get_ui()));
    default:
      throw SourceError(ErrorCode::SyntaxError, "'Y' cannot appear here", e.span);
  }
}

TowerElem parse_tower(std::string_view input) { return lower(parse(input, false)); }

DiffPoly parse_diffpoly(std::string_view input) { return lower_diffpoly(parse(input, true)); }

}  // namespace hardy::cli
