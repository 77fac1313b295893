// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass --update-goldens to rewrite the CLI golden files.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hardy/diffpoly.hpp"
#include "hardy/numeric/checks.hpp"
#include "hardy/numeric/integrator.hpp"
#include "hardy/numeric/probe.hpp"
#include "hardy/oscillation.hpp"
#include "hardy/sequences.hpp"
#include "support.hpp"

using namespace hardy;
using testsupport::Gen;
using testsupport::mono;

namespace {

// Pinned limits.
constexpr double kGridSeconds = 1.0;
constexpr double kIdentitySeconds = 1.0;
constexpr double kEulerSeconds = 10.0;
constexpr double kProbeSeconds = 60.0;
constexpr double kWronskianLimit = 1e-7;
constexpr double kGronwallSlack = 1e-6;  // relative, for the integrator's own error

bool g_update_goldens = false;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no runtime limit
  std::function<Outcome()> run;
};

TowerElem rw(std::size_t n, const Rational& c) {
  return (seq::omega(n) + TowerElem(c) * seq::gamma(n) * seq::gamma(n)) / TowerElem(4);
}

Outcome riemann_weber_grid() {
  const Rational cs[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  int bad = 0;
  int total = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& c : cs) {
      ++total;
      if (classify(rw(n, c)).oscillating != (c > 0)) ++bad;
    }
  }
  return {bad == 0 && total == 30, std::to_string(total - bad) + "/" + std::to_string(total) + " cases"};
}

Outcome ode_identity() {
  for (std::size_t n = 0; n <= 5; ++n) {
    const DiffPoly p = DiffPoly::constant(TowerElem(4)) * DiffPoly::Y(2) + DiffPoly::constant(testsupport::omega_ref(n)) * DiffPoly::Y(0);
    if (!eval_diffpoly(p, pow(testsupport::gamma_ref(n), Rational(-1, 2))).is_zero()) return {false, "n = " + std::to_string(n)};
  }
  return {true, "n <= 5"};
}

Outcome ladder_identities() {
  for (std::size_t n = 0; n <= 6; ++n) {
    const TowerElem g1 = testsupport::gamma_ref(n + 1);
    bool ok = seq::lambda(n + 1) == seq::lambda(n) + seq::gamma(n + 1);
    ok = ok && seq::omega(n + 1) == seq::omega(n) + g1 * g1;
    ok = ok && seq::omega(n) == seq::omega_map(seq::lambda(n));
    ok = ok && seq::sigma_map(seq::gamma(n)) == seq::omega(n) + seq::gamma(n) * seq::gamma(n);
    ok = ok && seq::lambda(n) == testsupport::lambda_ref(n) && seq::omega(n) == testsupport::omega_ref(n);
    if (!ok) return {false, "n = " + std::to_string(n)};
  }
  return {true, "n <= 6"};
}

Outcome chvar_identity() {
  Gen gen(4004);
  for (int i = 0; i < 50; ++i) {
    const TowerElem f = gen.elem(2, 3, 0.2);
    const TowerElem g = gen.nonzero_elem(2, 2, 0.2);
    const TowerElem g3 = g * g * g;
    const TowerElem phi = pow(g, Rational(-2));
    const DiffPoly lhs = DiffPoly::constant(g3) * comp_conjugate(mult_conjugate(linear_operator(f), g), phi);
    // P(g) = 4 g'' + f g, computed directly
    const TowerElem pg = TowerElem(4) * derive(derive(g)) + f * g;
    const DiffPoly rhs = DiffPoly::constant(TowerElem(4)) * DiffPoly::Y(2) + DiffPoly::constant(g3 * pg) * DiffPoly::Y(0);
    if (!(lhs == rhs)) return {false, "pair " + std::to_string(i) + ": f = " + f.to_string() + ", g = " + g.to_string()};
    const auto r = chvar_reduce(f, g);
    if (!(r.q == g3 * pg) || !(r.phi == phi)) return {false, "chvar_reduce disagrees on pair " + std::to_string(i)};
  }
  return {true, "50 pairs"};
}

Outcome sturm() {
  Gen gen(5005);
  int straddling = 0;
  for (int i = 0; i < 500; ++i) {
    const TowerElem q1 = testsupport::any_germ(gen);
    TowerElem d = gen.elem(3, 2, 0.0);
    if (gen.coin(0.6)) d = d * seq::gamma(3) * seq::gamma(3) / (TowerElem(1) + d * d);
    if (sign_at_infinity(d) < 0) d = -d;
    const TowerElem q2 = q1 + d;
    const bool o1 = classify(q1).oscillating;
    const bool o2 = classify(q2).oscillating;
    if (o1 && !o2) return {false, "q1 = " + q1.to_string() + ", q2 = " + q2.to_string()};
    straddling += (!o1 && o2);
  }
  return {true, "500 pairs, " + std::to_string(straddling) + " cross the boundary"};
}

Outcome phi_invariance() {
  Gen gen(6006);
  int done = 0;
  while (done < 200) {
    const TowerElem h = TowerElem(4) * testsupport::any_germ(gen);
    if (h.depth() > 2) continue;
    // phi_down is defined exactly on omega_0 + x^-2 (h o log)
    const TowerElem f = mono({Rational(-2)}) + mono({Rational(-2)}) * shift_up(h);
    if (f.depth() > 3) continue;
    const TowerElem r = phi_down(f);
    if (!(r == h)) return {false, "phi_down mismatch on " + f.to_string()};
    if (classify(f / TowerElem(4)).oscillating != classify(r / TowerElem(4)).oscillating) {
      return {false, "verdict changed on " + f.to_string()};
    }
    ++done;
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    if (!(phi_down(testsupport::omega_ref(n)) == testsupport::omega_ref(n - 1))) return {false, "phi_down(omega_n), n = " + std::to_string(n)};
  }
  return {true, "200 germs; omega chain n <= 5"};
}

Outcome log_decomposition() {
  const DiffPoly ex = DiffPoly::constant(TowerElem(2)) * DiffPoly::Y(0).pow(3) + DiffPoly::Y(1) * DiffPoly::Y(2);
  const std::string printed = to_log_decomposition(ex).to_string();
  if (printed != "2*Y<0>^3 + Y<0>^2*Y<1>^3 + Y<0>^2*Y<1>^2*Y<2>") return {false, "example renders as " + printed};
  Gen gen(7007);
  const auto fam = testsupport::monomial_family();
  for (int i = 0; i < 50; ++i) {
    const DiffPoly p = testsupport::random_diffpoly(gen, 3, 4);
    const LogDecomp d = to_log_decomposition(p);
    for (const auto& y : fam) {
      if (!(eval_logdecomp(d, y) == eval_diffpoly(p, y))) return {false, p.to_string() + " at " + y.to_string()};
    }
  }
  return {true, "50 polynomials x " + std::to_string(fam.size()) + " germs"};
}

Outcome euler_numerics() {
  std::ostringstream detail;
  bool pass = true;
  for (double a : {0.5, 1.0, 2.5}) {
    const auto q = numeric::Evaluator::compile(mono({Rational(-2)}, Rational(a)));
    const auto pair = numeric::integrate_pair(q, 10.0, 1e6, {1.0, 0.0}, {0.0, 1.0});
    const double expected = std::floor(std::sqrt(a - 0.25) * std::log(1e5) / M_PI);
    const double z1 = static_cast<double>(pair.y1.zeros.size());
    const double z2 = static_cast<double>(pair.y2.zeros.size());
    const bool ok = std::abs(z1 - expected) <= 1 && std::abs(z2 - expected) <= 1 && pair.wronskian_drift < kWronskianLimit;
    pass = pass && ok;
    detail << "a=" << a << " zeros " << z1 << "/" << z2 << " expect " << expected << " drift " << pair.wronskian_drift << "; ";
  }
  return {pass, detail.str()};
}

Outcome gronwall() {
  // |q| t^2 <= 2 on [1, 1e4]: q = a / t^2 with |a| <= 2.
  Gen gen(9009);
  for (int i = 0; i < 10; ++i) {
    const Rational a = testsupport::rat(gen.uniform(-8, 8), 4);
    const auto q = numeric::Evaluator::compile(mono({Rational(-2)}, a));
    const double y0 = gen.real(-3, 3);
    const double yp0 = gen.real(-3, 3);
    const auto traj = numeric::integrate(q, 1.0, 1e4, y0, yp0);
    const double big_c = std::abs(y0 - 1.0 * yp0) + std::abs(yp0);
    for (const auto& s : traj.samples) {
      if (std::abs(q(s.t)) * s.t * s.t > 2.0 * (1 + 1e-12)) return {false, "hypothesis fails"};
      const bool y_ok = std::abs(s.y) <= big_c * std::pow(s.t, 3.0) * (1 + kGronwallSlack);
      const bool yp_ok = std::abs(s.yp) <= big_c * std::pow(s.t, 2.0) * (1 + kGronwallSlack);
      if (!y_ok || !yp_ok) return {false, "bound fails at t = " + std::to_string(s.t)};
    }
    if (!numeric::gronwall_check(q, 2.0, traj)) return {false, "library check disagrees"};
  }
  return {true, "10 initial conditions"};
}

Outcome probe_consistency() {
  const std::vector<TowerElem> corpus = {
      // non-oscillating
      mono({Rational(-2)}, Rational(1, 4)),
      mono({Rational(-2)}, Rational(1, 5)),
      mono({Rational(-2)}, Rational(-1)),
      seq::omega(1) / TowerElem(4),
      seq::omega(2) / TowerElem(4),
      (seq::omega(0) + seq::gamma(1) * seq::gamma(1) / TowerElem(2)) / TowerElem(4),
      TowerElem(0),
      TowerElem(-1),
      -TowerElem::x(),
      mono({Rational(-3)}, Rational(50)),
      // oscillating
      TowerElem(1),
      TowerElem::x(),
      inverse(TowerElem::x()),
      mono({Rational(-2)}, Rational(1, 2)),
      mono({Rational(-2)}, Rational(4)),
      rw(1, Rational(400)),
      rw(1, Rational(2500)),
      rw(2, Rational(10000)),
      mono({Rational(-1), Rational(1)}),
      mono({Rational(-2), Rational(1, 2)}),
  };
  int agree = 0;
  int ambiguous = 0;
  for (const auto& q : corpus) {
    const bool osc = classify(q).oscillating;
    const auto r = numeric::numeric_oscillation_probe(q);
    if (r.trend == numeric::Trend::Ambiguous) {
      ++ambiguous;
      continue;
    }
    if ((r.trend == numeric::Trend::OscillatingTrend) != osc) {
      return {false, "contradiction on " + q.to_string() + ": " + std::string(numeric::to_string(r.trend))};
    }
    ++agree;
  }
  return {true, std::to_string(corpus.size()) + " germs, " + std::to_string(agree) + " agree, " + std::to_string(ambiguous) + " ambiguous"};
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') out += "'\\''";
    else out += ch;
  }
  return out + "'";
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome cli_goldens() {
  const std::string dir = HARDY_GOLDEN_DIR;
  std::ifstream in(dir + "/cases.json");
  if (!in) return {false, "missing cases.json"};
  const auto cases = nlohmann::json::parse(in);
  int same = 0;
  std::string first_diff;
  for (const auto& c : cases) {
    std::string cmd = shell_quote(HARDYOSC_PATH);
    for (const auto& a : c["args"]) cmd += " " + shell_quote(a.get<std::string>());
    const std::string got = capture(cmd + " 2>/dev/null");
    const std::string path = dir + "/" + c["name"].get<std::string>() + ".json";
    if (g_update_goldens) {
      std::ofstream(path, std::ios::binary) << got;
      ++same;
      continue;
    }
    std::ifstream gf(path, std::ios::binary);
    const std::string want((std::istreambuf_iterator<char>(gf)), std::istreambuf_iterator<char>());
    if (gf && got == want) ++same;
    else if (first_diff.empty()) first_diff = c["name"].get<std::string>();
  }
  std::string detail = std::to_string(same) + "/" + std::to_string(cases.size()) + " identical";
  if (!first_diff.empty()) detail += ", first mismatch " + first_diff;
  return {same == static_cast<int>(cases.size()) && cases.size() == 12, detail};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--update-goldens") g_update_goldens = true;
    if (arg == "--only" && i + 1 < argc) only = std::stoi(argv[++i]);
  }
  const std::vector<Criterion> criteria = {
      {1, "Riemann-Weber grid", kGridSeconds, riemann_weber_grid},
      {2, "gamma_n^(-1/2) solves 4y'' + omega_n y = 0", kIdentitySeconds, ode_identity},
      {3, "ladder identities", 0, ladder_identities},
      {4, "change-of-variables identity", 0, chvar_identity},
      {5, "Sturm monotonicity", 0, sturm},
      {6, "phi invariance", 0, phi_invariance},
      {7, "logarithmic decomposition", 0, log_decomposition},
      {8, "Euler equation numerics", kEulerSeconds, euler_numerics},
      {9, "growth bound", 0, gronwall},
      {10, "probe consistency", kProbeSeconds, probe_consistency},
      {11, "CLI golden files", 0, cli_goldens},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.limit_seconds) + " s limit)";
    }
    failed += !o.pass;
    std::printf("criterion %2d %-45s %s  %.3f s  %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ran) - failed, ran);
  return failed == 0 ? 0 : 1;
}
