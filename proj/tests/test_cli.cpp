#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "hardy/cli/commands.hpp"
#include "hardy/cli/parser.hpp"
#include "hardy/cli/report.hpp"
#include "hardy/error.hpp"
#include "hardy/sequences.hpp"
#include "support.hpp"

using namespace hardy;
using namespace hardy::cli;
using testsupport::Gen;
using testsupport::mono;

namespace {

using K = Expr::Kind;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hardyosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
  return k;
}

}  // namespace

TEST_CASE("parse tree of a simple quotient") {
  const Expr e = parse("1/(4*x^2)");
  REQUIRE(e.kind == K::Div);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].kind == K::Rational);
  CHECK(e.children[0].value == Rational(1));
  const Expr& m = e.children[1];
  REQUIRE(m.kind == K::Mul);
  CHECK(m.children[0].kind == K::Rational);
  CHECK(m.children[0].value == Rational(4));
  REQUIRE(m.children[1].kind == K::Pow);
  CHECK(m.children[1].value == Rational(2));
  CHECK(m.children[1].children[0].kind == K::Var);
  CHECK(e.span.begin == 0);
  CHECK(e.span.end == 9);
  CHECK(parse("  1 / ( 4 * x ^ 2 ) ").kind == K::Div);
}

TEST_CASE("lowering examples") {
  const TowerElem rw = parse_tower("omega(2)/4 + gamma(2)^2/4");
  CHECK(rw == (seq::omega(2) + seq::gamma(2) * seq::gamma(2)) / TowerElem(4));
  CHECK(parse_tower("log(log(x))") == TowerElem::ell(2));
  CHECK(parse_tower("x^(1/2)") == mono({Rational(1, 2)}));
  CHECK(parse_tower("gamma(1)*l1") == mono({Rational(-1)}));
  CHECK(parse_tower("0.25") == TowerElem(Rational(1, 4)));
  CHECK(parse_tower("l0") == TowerElem::x());
  CHECK(parse_tower("l0").to_string() == "x");
  CHECK(parse_tower("x^-2") == mono({Rational(-2)}));
  CHECK(parse_tower("x^(-3/2)") == mono({Rational(-3, 2)}));
  CHECK(parse_tower("-x + 1") == TowerElem(1) - TowerElem::x());
  CHECK(parse_tower("sigma_gamma(1)") == seq::sigma_gamma(1));
  CHECK(parse_tower("lambda(3)") == seq::lambda(3));
  CHECK(parse_tower("log(x^2*l1)") == TowerElem(2) * TowerElem::ell(1) + TowerElem::ell(2));
  CHECK(parse_tower("(x+1)^2") == TowerElem::x() * TowerElem::x() + TowerElem(2) * TowerElem::x() + TowerElem(1));
}

TEST_CASE("lowering errors carry spans") {
  try {
    (void)parse_tower("1 + log(x+1)");
    FAIL("expected an error");
  } catch (const SourceError& e) {
    CHECK(e.code() == ErrorCode::NonMonomialLog);
    CHECK(e.span().begin == 4);
    CHECK(e.span().end == 12);
  }
  try {
    (void)parse_tower("x/(l1-l1)");
    FAIL("expected an error");
  } catch (const SourceError& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(parse_tower("1/0."), SourceError);
  try {
    (void)parse_tower("(x+1)^(1/2)");
    FAIL("expected an error");
  } catch (const SourceError& e) {
    CHECK(e.code() == ErrorCode::NonMonomialPower);
  }
  for (const char* bad : {"", "x +", "(x", "x)", "gamma(x)", "y", "2 3", "x^l1", "log x", "Y", "x^(1/0)"}) {
    try {
      (void)parse_tower(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
    }
  }
}

TEST_CASE("differential polynomial input") {
  const DiffPoly p = parse_diffpoly("2*Y^3 + Y'*Y''");
  CHECK(p.to_string() == "2*Y^3 + Y'*Y''");
  CHECK(parse_diffpoly("4*Y'' + omega(2)*Y") == linear_operator(seq::omega(2)));
  CHECK(parse_diffpoly("(Y + x)^2") == parse_diffpoly("Y^2 + 2*x*Y + x^2"));
  CHECK_THROWS_AS(parse_diffpoly("1/Y"), Error);
  CHECK_THROWS_AS(parse_diffpoly("Y^(1/2)"), Error);
  CHECK_THROWS_AS(parse_diffpoly("Y'''''''''"), Error);
}

TEST_CASE("rendering is a fixed point of parse") {
  Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    const TowerElem f = gen.elem(3, 4, 0.3);
    const std::string s = f.to_string();
    const TowerElem g = parse_tower(s);
    CHECK(g == f);
    CHECK(g.to_string() == s);
  }
}

TEST_CASE("error spans stay inside the input") {
  Gen gen(12);
  const std::string alphabet = "x l1 2 3 / * + - ^ ( ) log gamma omega 0.5 Y ' ,";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const int len = gen.uniform(0, 16);
    for (int k = 0; k < len; ++k) s += alphabet[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(alphabet.size()) - 1))];
    try {
      (void)parse_tower(s);
    } catch (const SourceError& e) {
      CHECK(e.span().begin <= e.span().end);
      CHECK(e.span().end <= std::max<std::size_t>(s.size(), 1));
      if (!s.empty()) CHECK(e.span().begin < s.size());
    } catch (const Error&) {
      FAIL("error without a span for '", s, "'");
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"classify", "1/(4*x^2)"}).code == kExitOk);
  CHECK(run_cli({"classify", "log(x+1)"}).code == kExitInput);
  CHECK(run_cli({"classify", "x +"}).code == kExitInput);
  CHECK(run_cli({"bogus"}).code == kExitInput);
  CHECK(run_cli({}).code == kExitInput);
  CHECK(run_cli({"sequences", "--n", "65"}).code == kExitInput);
  CHECK(run_cli({"simulate", "l4"}).code == kExitNumeric);
  CHECK(run_cli({"simulate", "1", "--t0", "-1"}).code == kExitNumeric);
  CHECK(run_cli({"phi", "x"}).code == kExitInput);
  CHECK(run_cli({"flw", "--f", "0", "--g", "x"}).code == kExitInput);
  CHECK(run_cli({"--help"}).code == kExitOk);

  const auto bad = run_cli({"classify", "1 + log(x+1)"});
  CHECK(bad.err.find("NonMonomialLog") != std::string::npos);
  CHECK(bad.err.find("    ^^^^^^^^") != std::string::npos);
}

TEST_CASE("text output") {
  CHECK(run_cli({"phi", "omega(4)", "--times", "2"}).out == seq::omega(2).to_string() + "\n");
  const auto osc = run_cli({"classify", "omega(3)/4 + gamma(3)^2/8"});
  CHECK(osc.out.find("oscillating") != std::string::npos);
  CHECK(osc.out.find("nonoscillating") == std::string::npos);
  CHECK(run_cli({"riccati", "--z", "1/(2*x)", "--f", "1/(4*x^2)"}).out == "holds: true\n");
  CHECK(run_cli({"riccati", "--z", "1/x", "--f", "1/(4*x^2)"}).out == "holds: false\n");
}

TEST_CASE("classify JSON") {
  const auto r = run_cli({"classify", "1/(4*x^2)", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"input", "normalized", "depth", "verdict", "witness", "flw"});
  CHECK(j["verdict"] == "nonoscillating");
  CHECK(keys(j["witness"]) == std::vector<std::string>{"kind", "n", "c"});
  CHECK(j["witness"]["kind"] == "upper");
  CHECK(j["witness"]["n"] == 0);
  CHECK(j["witness"]["c"].is_null());
  CHECK(j["flw"].is_null());

  const Json v = Json::parse(run_cli({"classify", "omega(3)/4 + gamma(3)^2/8", "--json"}).out);
  CHECK(v["verdict"] == "oscillating");
  CHECK(v["witness"]["kind"] == "lower");
  CHECK(v["witness"]["n"] == 3);
  CHECK(v["witness"]["c"] == "1/4");
}

TEST_CASE("numeric verification never changes the verdict") {
  for (const char* q : {"1/(4*x^2)", "1/(2*x^2)", "1", "omega(1)/4", "omega(2)/4 + gamma(2)^2/4", "-x", "l4"}) {
    // `--` keeps a leading minus from reading as an option
    const auto plain = run_cli({"classify", "--json", "--", q});
    const auto probed = run_cli({"classify", "--json", "--verify-numeric", "--", q});
    REQUIRE(plain.code == 0);
    REQUIRE(probed.code == 0);
    Json a = Json::parse(plain.out);
    Json b = Json::parse(probed.out);
    REQUIRE(b.contains("numeric_probe"));
    b.erase("numeric_probe");
    CHECK(a == b);
  }
}

TEST_CASE("other JSON documents") {
  const Json s = Json::parse(run_cli({"sequences", "--n", "2", "--json"}).out);
  CHECK(s["rows"].size() == 3);
  CHECK(keys(s["rows"][0]) == std::vector<std::string>{"n", "ell", "gamma", "lambda", "omega", "sigma_gamma"});
  const Json d = Json::parse(run_cli({"decompose", "2*Y^3 + Y'*Y''", "--json"}).out);
  CHECK(d["logarithmic"]["text"] == "2*Y<0>^3 + Y<0>^2*Y<1>^3 + Y<0>^2*Y<1>^2*Y<2>");
  const Json e = Json::parse(run_cli({"classify", "log(x+1)", "--json"}).out);
  CHECK(keys(e) == std::vector<std::string>{"error", "message", "input", "span"});
  CHECK(e["error"] == "NonMonomialLog");
}
