#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "nisq/circuit.hpp"
#include "nisq/hybrid.hpp"
#include "nisq/lightcone.hpp"

namespace nisq {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Circuit file: {"topology": {"kind": "chain"|"grid"|"full", "n"|"rows"/"cols"},
//  "layers": [[{"gate": name | 4x4 [[re,im],...], "qubits": [i, j]}, ...], ...]}.
// Errors name the offending layer/gate index.
Circuit circuit_from_json_text(const std::string& text);
Circuit load_circuit(const std::string& path);

std::string circuit_to_json_text(const Circuit& circuit);

std::string cone_report_to_json_text(const ConeReport& report);

struct ScenarioSpec {
  std::string name;            // parity | adaptive-copy | coin-pad | random-adaptive
  std::vector<int> widths;
  int depth = 1;
  int pad_bits = 0;            // coin-pad only
  std::uint64_t seed = 0;      // random-adaptive only
};

// Scenario file: {"scenario": name, "q": rounds, "n": int | [ints], "t": depth,
//  "pad": bits, "seed": u64}; q may be omitted when "n" is a list.
ScenarioSpec scenario_spec_from_json_text(const std::string& text);
ScenarioSpec load_scenario_spec(const std::string& path);

std::unique_ptr<Scenario> make_scenario(const ScenarioSpec& spec);

}  // namespace nisq
