#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hardy/diffpoly.hpp"
#include "hardy/error.hpp"
#include "hardy/numeric/probe.hpp"
#include "hardy/oscillation.hpp"

namespace hardy::cli {

using Json = nlohmann::ordered_json;

/// {"input", "normalized", "depth", "verdict", "witness", "flw"}.
Json verdict_json(const std::string& input, const Verdict& v, std::optional<FlwOutcome> flw = std::nullopt);

/// Outcome of --verify-numeric.
struct ProbeReport {
  std::optional<numeric::ProbeResult> result;
  std::size_t phi_steps = 0;  // phi_down applications before integrating
  std::string reduced;        // the q actually integrated
  std::string error;          // set when no probe could be run
};

Json probe_json(const ProbeReport& r);

Json sequences_json(std::size_t n);

Json decompose_json(const std::string& input, const DiffPoly& p);

Json phi_json(const std::string& input, const std::vector<TowerElem>& chain);

Json riccati_json(const TowerElem& z, const TowerElem& f, bool holds);

Json error_json(const Error& err, const std::string& input);

/// Human-readable forms.
std::string verdict_text(const Verdict& v);
std::string witness_text(const Witness& w);
std::string sequences_text(std::size_t n);

}  // namespace hardy::cli
