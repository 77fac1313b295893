#include "hardy/cli/report.hpp"

#include <sstream>

#include "hardy/sequences.hpp"

namespace hardy::cli {

namespace {

Json index_json(const MultiIndex& idx) {
  Json a = Json::array();
  for (unsigned v : idx) a.push_back(v);
  return a;
}

Json terms_json(const SparsePoly<TowerElem>& p) {
  Json a = Json::array();
  for (const auto& [idx, c] : p.terms()) {
    Json t;
    t["index"] = index_json(idx);
    t["coeff"] = c.to_string();
    a.push_back(std::move(t));
  }
  return a;
}

}  // namespace

Json verdict_json(const std::string& input, const Verdict& v, std::optional<FlwOutcome> flw) {
  Json j;
  j["input"] = input;
  j["normalized"] = v.normalized_input.to_string();
  j["depth"] = v.depth_used;
  j["verdict"] = v.oscillating ? "oscillating" : "nonoscillating";
  Json w;
  w["kind"] = v.witness.kind == Witness::Kind::UpperBound ? "upper" : "lower";
  w["n"] = v.witness.n;
  if (v.witness.kind == Witness::Kind::LowerBound) {
    w["c"] = to_string(v.witness.c);
  } else {
    w["c"] = nullptr;
  }
  j["witness"] = std::move(w);
  if (flw) {
    j["flw"] = std::string(to_string(*flw));
  } else {
    j["flw"] = nullptr;
  }
  return j;
}

Json probe_json(const ProbeReport& r) {
  Json j;
  if (!r.result) {
    j["trend"] = nullptr;
    j["error"] = r.error;
    return j;
  }
  const auto& p = *r.result;
  j["trend"] = std::string(numeric::to_string(p.trend));
  j["phi_steps"] = r.phi_steps;
  j["integrated_q"] = r.reduced;
  j["t0"] = p.t0;
  j["t1"] = p.t1;
  j["t_transient"] = p.t_transient;
  j["zeros"] = Json::array({p.zeros_first, p.zeros_second});
  j["step_budget_exhausted"] = p.step_budget_exhausted;
  return j;
}

Json sequences_json(std::size_t n) {
  Json j;
  j["n"] = n;
  Json rows = Json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    const auto row = seq::table_row(k);
    Json r;
    r["n"] = k;
    r["ell"] = row.ell.to_string();
    r["gamma"] = row.gamma.to_string();
    r["lambda"] = row.lambda.to_string();
    r["omega"] = row.omega.to_string();
    r["sigma_gamma"] = row.sigma_gamma.to_string();
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json decompose_json(const std::string& input, const DiffPoly& p) {
  Json j;
  j["input"] = input;
  j["order"] = p.order();
  Json std_part;
  std_part["text"] = p.to_string();
  std_part["terms"] = terms_json(p.poly());
  j["standard"] = std::move(std_part);
  const LogDecomp d = to_log_decomposition(p);
  Json log_part;
  log_part["text"] = d.to_string();
  log_part["terms"] = terms_json(d.poly());
  j["logarithmic"] = std::move(log_part);
  if (d.is_zero()) {
    j["dominant"] = nullptr;
  } else {
    const DominantSign ds = dominant_sign_at_large_argument(d);
    Json dom;
    dom["index"] = index_json(ds.index);
    dom["coeff"] = ds.coeff.to_string();
    dom["sign"] = ds.sign;
    dom["sign_negative_argument"] = ds.sign_negative;
    j["dominant"] = std::move(dom);
  }
  return j;
}

Json phi_json(const std::string& input, const std::vector<TowerElem>& chain) {
  Json j;
  j["input"] = input;
  j["times"] = chain.empty() ? 0 : chain.size() - 1;
  Json steps = Json::array();
  for (const auto& f : chain) steps.push_back(f.to_string());
  j["steps"] = std::move(steps);
  j["result"] = chain.empty() ? std::string() : chain.back().to_string();
  return j;
}

Json riccati_json(const TowerElem& z, const TowerElem& f, bool holds) {
  Json j;
  j["z"] = z.to_string();
  j["f"] = f.to_string();
  j["residual"] = (derive(z) + z * z + f).to_string();
  j["holds"] = holds;
  return j;
}

Json error_json(const Error& err, const std::string& input) {
  Json j;
  j["error"] = std::string(to_string(err.code()));
  j["message"] = err.message();
  if (const auto* se = dynamic_cast<const SourceError*>(&err)) {
    j["input"] = input;
    j["span"] = Json::array({se->span().begin, se->span().end});
  }
  return j;
}

std::string witness_text(const Witness& w) {
  std::ostringstream s;
  if (w.kind == Witness::Kind::UpperBound) {
    s << "4q <= omega(" << w.n << ") eventually";
  } else {
    s << "4q >= omega(" << w.n << ") + " << to_string(w.c) << "*gamma(" << w.n << ")^2 eventually";
  }
  return s.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream s;
  s << "normalized 4q: " << v.normalized_input.to_string() << '\n'
    << "depth: " << v.depth_used << '\n'
    << "verdict: " << (v.oscillating ? "oscillating" : "nonoscillating") << '\n'
    << "witness: " << witness_text(v.witness) << '\n';
  return s.str();
}

std::string sequences_text(std::size_t n) {
  std::ostringstream s;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto row = seq::table_row(k);
    s << "n = " << k << '\n'
      << "  ell         = " << row.ell.to_string() << '\n'
      << "  gamma       = " << row.gamma.to_string() << '\n'
      << "  lambda      = " << row.lambda.to_string() << '\n'
      << "  omega       = " << row.omega.to_string() << '\n'
      << "  sigma_gamma = " << row.sigma_gamma.to_string() << '\n';
  }
  return s.str();
}

}  // namespace hardy::cli
