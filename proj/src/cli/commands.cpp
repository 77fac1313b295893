#include "hardy/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardy/cli/parser.hpp"
#include "hardy/cli/report.hpp"
#include "hardy/diffpoly.hpp"
#include "hardy/numeric/csv.hpp"
#include "hardy/numeric/evaluator.hpp"
#include "hardy/numeric/integrator.hpp"
#include "hardy/numeric/probe.hpp"
#include "hardy/oscillation.hpp"
#include "hardy/sequences.hpp"

namespace hardy::cli {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Parses one named input, remembering which string failed for diagnostics.
struct InputContext {
  std::string current;

  TowerElem tower(const std::string& text) {
    current = text;
    return parse_tower(text);
  }
  DiffPoly diffpoly(const std::string& text) {
    current = text;
    return parse_diffpoly(text);
  }
};

void report_error(const Error& e, const std::string& input, bool json, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (const auto* se = dynamic_cast<const SourceError*>(&e); se && !input.empty()) {
    const Span s = se->span();
    const std::size_t b = std::min(s.begin, input.size());
    const std::size_t len = std::max<std::size_t>(1, std::min(s.end, input.size()) - std::min(b, s.end));
    err << "  " << input << '\n' << "  " << std::string(b, ' ') << std::string(len, '^') << '\n';
  }
  if (json) emit(out, error_json(e, input));
}

ProbeReport run_probe(const TowerElem& q) {
  ProbeReport r;
  TowerElem f = TowerElem(4) * q;
  try {
    while (f.depth() > numeric::kMaxNumericDepth) {
      f = phi_down(f);
      ++r.phi_steps;
    }
    const TowerElem qr = f / TowerElem(4);
    r.reduced = qr.to_string();
    r.result = numeric::numeric_oscillation_probe(qr);
  } catch (const Error& e) {
    r.result.reset();
    r.error = e.what();
  }
  return r;
}

std::string default_zeros_path(const std::string& csv) {
  const auto dot = csv.rfind('.');
  const auto slash = csv.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return csv + "_zeros.csv";
  return csv.substr(0, dot) + "_zeros" + csv.substr(dot);
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::DomainError, "cannot open '" + path + "' for writing");
  body(f);
  if (!f) throw Error(ErrorCode::DomainError, "failed writing '" + path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact oscillation analysis of y'' + q y = 0 over iterated-logarithm germs", "hardyosc"};
  app.require_subcommand(1);

  bool json = false;
  std::string expr;

  auto* classify_cmd = app.add_subcommand("classify", "Decide oscillation of y'' + q y = 0");
  bool verify_numeric = false;
  classify_cmd->add_option("expr", expr, "q as a tower expression")->required();
  classify_cmd->add_flag("--json", json, "Emit JSON");
  classify_cmd->add_flag("--verify-numeric", verify_numeric, "Append a numerical oscillation probe");

  auto* seq_cmd = app.add_subcommand("sequences", "Table of l, gamma, lambda, omega, sigma(gamma)");
  std::size_t seq_n = 0;
  seq_cmd->add_option("--n", seq_n, "Largest index")->required()->check(CLI::Range(0, 64));
  seq_cmd->add_flag("--json", json, "Emit JSON");

  auto* dec_cmd = app.add_subcommand("decompose", "Logarithmic decomposition of a differential polynomial");
  dec_cmd->add_option("expr", expr, "Polynomial in Y, Y', Y'', ...")->required();
  dec_cmd->add_flag("--json", json, "Emit JSON");

  auto* ric_cmd = app.add_subcommand("riccati", "Check z' + z^2 + f = 0");
  std::string z_text;
  std::string f_text;
  ric_cmd->add_option("--z", z_text)->required();
  ric_cmd->add_option("--f", f_text)->required();
  ric_cmd->add_flag("--json", json, "Emit JSON");

  auto* phi_cmd = app.add_subcommand("phi", "Apply the depth-reducing transform to f in 4y'' + f y = 0");
  std::size_t times = 1;
  phi_cmd->add_option("expr", expr, "f as a tower expression")->required();
  phi_cmd->add_option("--times", times, "Number of applications")->check(CLI::Range(0, 64));
  phi_cmd->add_flag("--json", json, "Emit JSON");

  auto* flw_cmd = app.add_subcommand("flw", "Oscillation of (f y')' + g y = 0");
  std::string g_text;
  flw_cmd->add_option("--f", f_text)->required();
  flw_cmd->add_option("--g", g_text)->required();
  flw_cmd->add_flag("--json", json, "Emit JSON");

  auto* sim_cmd = app.add_subcommand("simulate", "Integrate y'' + q y = 0 numerically");
  double t0 = 0.0;
  double t1 = 1e6;
  double rtol = numeric::kDefaultRtol;
  double atol = numeric::kDefaultAtol;
  double y0 = 1.0;
  double yp0 = 0.0;
  std::string csv_path;
  std::string zeros_path;
  sim_cmd->add_option("expr", expr, "q as a tower expression")->required();
  sim_cmd->add_option("--t0", t0, "Start (default max(10, 2 t_min))");
  sim_cmd->add_option("--t1", t1, "End")->capture_default_str();
  sim_cmd->add_option("--rtol", rtol)->capture_default_str();
  sim_cmd->add_option("--atol", atol)->capture_default_str();
  sim_cmd->add_option("--y0", y0)->capture_default_str();
  sim_cmd->add_option("--yp0", yp0)->capture_default_str();
  sim_cmd->add_option("--csv", csv_path, "Trajectory CSV (t,y,yp)");
  sim_cmd->add_option("--zeros-csv", zeros_path, "Zeros CSV (default: <csv>_zeros.csv)");
  sim_cmd->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  InputContext in;
  try {
    if (*classify_cmd) {
      const TowerElem q = in.tower(expr);
      const Verdict v = classify(q);
      if (json) {
        Json j = verdict_json(expr, v);
        if (verify_numeric) j["numeric_probe"] = probe_json(run_probe(q));
        emit(out, j);
      } else {
        out << "input: " << expr << '\n' << verdict_text(v);
        if (verify_numeric) {
          const ProbeReport r = run_probe(q);
          if (r.result) {
            out << "numeric probe: " << numeric::to_string(r.result->trend) << " (zeros after transient: "
                << r.result->zeros_first << ", " << r.result->zeros_second << " on ["
                << numeric::format_double(r.result->t0) << ", " << numeric::format_double(r.result->t1)
                << "])\n";
          } else {
            out << "numeric probe: unavailable (" << r.error << ")\n";
          }
        }
      }
    } else if (*seq_cmd) {
      if (json) {
        emit(out, sequences_json(seq_n));
      } else {
        out << sequences_text(seq_n);
      }
    } else if (*dec_cmd) {
      const DiffPoly p = in.diffpoly(expr);
      const Json j = decompose_json(expr, p);
      if (json) {
        emit(out, j);
      } else {
        out << "standard: " << j["standard"]["text"].get<std::string>() << '\n'
            << "logarithmic: " << j["logarithmic"]["text"].get<std::string>() << '\n';
        if (!j["dominant"].is_null()) {
          out << "dominant index: " << j["dominant"]["index"].dump() << ", sign "
              << j["dominant"]["sign"].get<int>() << " (at -y: " << j["dominant"]["sign_negative_argument"].get<int>()
              << ")\n";
        }
      }
    } else if (*ric_cmd) {
      const TowerElem z = in.tower(z_text);
      const TowerElem f = in.tower(f_text);
      const bool holds = seq::riccati_check(z, f);
      if (json) {
        emit(out, riccati_json(z, f, holds));
      } else {
        out << "holds: " << (holds ? "true" : "false") << '\n';
      }
    } else if (*phi_cmd) {
      std::vector<TowerElem> chain{in.tower(expr)};
      for (std::size_t i = 0; i < times; ++i) chain.push_back(phi_down(chain.back()));
      if (json) {
        emit(out, phi_json(expr, chain));
      } else {
        out << chain.back().to_string() << '\n';
      }
    } else if (*flw_cmd) {
      const TowerElem f = in.tower(f_text);
      const TowerElem g = in.tower(g_text);
      in.current.clear();
      const FlwOutcome flw = classify_selfadjoint(f, g);
      // (f y')' + g y = f (y'' + (f'/f) y' + (g/f) y)
      const Verdict v = classify_general(log_derivative(f), g / f);
      const std::string input = "f = " + f_text + "; g = " + g_text;
      if (json) {
        emit(out, verdict_json(input, v, flw));
      } else {
        out << "flw: " << to_string(flw) << '\n' << verdict_text(v);
      }
    } else if (*sim_cmd) {
      const TowerElem q = in.tower(expr);
      in.current.clear();
      const auto ev = numeric::Evaluator::compile(q);
      if (sim_cmd->count("--t0") == 0) t0 = numeric::default_start(ev);
      if (!(t1 > t0)) throw Error(ErrorCode::DomainError, "--t1 must exceed --t0");
      const numeric::Trajectory traj = numeric::integrate(ev, t0, t1, y0, yp0, rtol, atol);
      if (!csv_path.empty()) {
        if (zeros_path.empty()) zeros_path = default_zeros_path(csv_path);
        write_file(csv_path, [&](std::ostream& s) { numeric::write_trajectory_csv(traj, s); });
        write_file(zeros_path, [&](std::ostream& s) { numeric::write_zeros_csv(traj, s); });
      }
      if (json) {
        Json j;
        j["input"] = expr;
        j["t0"] = traj.t0;
        j["t1"] = traj.t1;
        j["steps"] = traj.samples.empty() ? 0 : traj.samples.size() - 1;
        j["zeros"] = traj.zeros.size();
        j["truncated"] = traj.truncated;
        j["csv"] = csv_path.empty() ? Json(nullptr) : Json(csv_path);
        j["zeros_csv"] = zeros_path.empty() ? Json(nullptr) : Json(zeros_path);
        emit(out, j);
      } else {
        out << "integrated on [" << numeric::format_double(traj.t0) << ", " << numeric::format_double(traj.t1)
            << "]: " << traj.samples.size() << " samples, " << traj.zeros.size() << " zeros"
            << (traj.truncated ? " (step budget exhausted)" : "") << '\n';
        if (!csv_path.empty()) out << "wrote " << csv_path << " and " << zeros_path << '\n';
      }
    }
  } catch (const Error& e) {
    report_error(e, in.current, json, out, err);
    return is_numeric_error(e.code()) ? kExitNumeric : kExitInput;
  }
  return kExitOk;
}

}  // namespace hardy::cli
