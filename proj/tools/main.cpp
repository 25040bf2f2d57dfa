#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nisq/bounds.hpp"
#include "nisq/circuit_io.hpp"
#include "nisq/entanglement.hpp"
#include "nisq/hybrid.hpp"
#include "nisq/infotheory.hpp"
#include "nisq/lightcone.hpp"
#include "nisq/shearer.hpp"
#include "nisq/simulator.hpp"

using nlohmann::json;
using namespace nisq;

namespace {

// 0 ok, 1 failed bound check, 2 parse failure, 3 validation failure, 4 cap exceeded
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCap = 4;

int qubit_cap_from_env() {
  if (const char* env = std::getenv("NISQ_QUBIT_CAP")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return kDefaultQubitCap;
}

Bipartition make_cut(const Circuit& circuit, int cut, const std::vector<int>& block) {
  if (!block.empty())
    return Bipartition::grid_block(circuit.topology, block[0], block[1]);
  const int n = circuit.num_qubits();
  return Bipartition::chain_cut(n, cut > 0 ? cut : n / 2);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

struct SimulateArgs {
  std::string circuit_path;
  double p = 0.1;
  int cut = 0;
  std::vector<int> block;
  std::string out_path;
};

int run_simulate(const SimulateArgs& args) {
  Circuit circuit;
  try {
    circuit = load_circuit(args.circuit_path);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const ValidationReport report = validate_circuit(circuit);
  if (!report.ok()) {
    std::cerr << "invalid circuit:\n" << report.summary();
    return kExitValidation;
  }
  const int n = circuit.num_qubits();
  Bipartition part = make_cut(circuit, args.cut, args.block);

  EvolveResult result;
  try {
    result = evolve(circuit, NoiseStrength(args.p), true, qubit_cap_from_env());
  } catch (const qubit_cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }

  bool all_ok = true;
  std::ostringstream csv;
  csv << "t,entropy,distance,decay_bound,mutual_information,cone_bound\n";
  std::cout << "    t          S(rho)    D(rho||max)     n(1-p)^t        I(A:B)   cone\n";
  auto emit = [&](int t, const DensityMatrix& state) {
    const double s = von_neumann_entropy(state);
    const double dist = distance_to_max_mixed(state);
    const double decay = decay_bound(n, args.p, t);
    const double mi = mutual_information(state, part);
    const double cone = depth_entanglement_bound(circuit.prefix(t), part);
    const bool row_ok = check_state_invariants(state).ok && dist <= decay + 1e-7 &&
                        mi <= dist + 1e-7 && mi <= 2 * cone + 1e-7;
    all_ok = all_ok && row_ok;
    std::printf("%5d %15.9f %14.9f %14.9f %13.9f %6.1f%s\n", t, s, dist, decay, mi, cone,
                row_ok ? "" : "  CHECK FAILED");
    csv << t << "," << format_sig12(s) << "," << format_sig12(dist) << "," << format_sig12(decay)
        << "," << format_sig12(mi) << "," << format_sig12(cone) << "\n";
  };
  emit(0, DensityMatrix::zero_state(n));
  for (int t = 1; t <= circuit.depth(); ++t) emit(t, result.trajectory[t - 1]);

  if (!args.out_path.empty() && !write_file(args.out_path, csv.str())) {
    std::cerr << "cannot write " << args.out_path << "\n";
    return kExitCheckFailed;
  }
  return all_ok ? 0 : kExitCheckFailed;
}

struct CurveArgs {
  int n_min = 2;
  int n_max = 64;
  std::vector<double> p_list;
  std::string topology = "chain";
  std::string out_path;
};

int run_curve(const CurveArgs& args) {
  std::vector<int> ns;
  for (int n = args.n_min; n <= args.n_max; ++n) ns.push_back(n);
  const CurveTopology topo = args.topology == "grid" ? CurveTopology::grid : CurveTopology::chain;
  std::vector<CurvePoint> points;
  for (double p : args.p_list) {
    const auto rows = fig_curve(ns, p, topo);
    points.insert(points.end(), rows.begin(), rows.end());
  }
  const std::string csv = curve_csv(points);
  if (!args.out_path.empty()) {
    if (!write_file(args.out_path, csv)) {
      std::cerr << "cannot write " << args.out_path << "\n";
      return kExitCheckFailed;
    }
    std::cout << "wrote " << points.size() << " rows to " << args.out_path << "\n";
  } else {
    std::cout << csv;
  }
  return 0;
}

struct BoundsArgs {
  int n = 16;
  double p = 0.5;
  int t = -1;
  double runtime = -1;
};

int run_bounds(const BoundsArgs& args) {
  json j;
  j["n"] = args.n;
  j["p"] = args.p;
  j["t_star"] = t_star_1d(args.n, args.p);
  if (args.n >= 2) j["ent_bound_1d"] = ent_bound_1d(args.n, args.p);
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(args.n))));
  if (args.n >= 4 && side * side == args.n) {
    const EntBound2d b2 = ent_bound_2d(args.n, args.p);
    j["ent_bound_2d"] = b2.value;
    j["ent_bound_2d_certified"] = b2.certified;
    if (!b2.certified)
      std::cout << "note: n <= (3/(1-p))^2, the 2d closed form is reported but not certified\n";
  }
  if (args.t >= 0) j["decay_bound"] = decay_bound(args.n, args.p, args.t);
  if (args.runtime >= 1) {
    j["depth_threshold_thmC1"] =
        advantage_depth_threshold(args.runtime, args.p, ThresholdVariant::thmC1);
    j["depth_threshold_thmC2"] =
        advantage_depth_threshold(args.runtime, args.p, ThresholdVariant::thmC2);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct ShearerArgs {
  int n = 3;
  int trials = 200;
  std::uint64_t seed = 0;
};

int run_shearer(const ShearerArgs& args) {
  const double worst = randomized_shearer_audit(args.n, args.trials, args.seed);
  const bool pass = worst >= -1e-7;
  json j;
  j["n"] = args.n;
  j["trials"] = args.trials;
  j["seed"] = args.seed;
  j["min_slack"] = worst;
  j["pass"] = pass;
  std::cout << "min slack " << (pass ? ">= 0 within tolerance: PASS" : "NEGATIVE: FAIL") << "\n";
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : kExitCheckFailed;
}

struct HybridArgs {
  std::string scenario;  // file path or builtin name
  double p = 0.5;
  int q = 2;
  std::vector<int> widths;
  int t = 2;
  int pad = 1;
  std::uint64_t seed = 0;
};

int run_hybrid(const HybridArgs& args) {
  ScenarioSpec spec;
  try {
    if (args.scenario.find(".json") != std::string::npos) {
      spec = load_scenario_spec(args.scenario);
    } else {
      spec.name = args.scenario;
      spec.widths = args.widths.empty() ? std::vector<int>(args.q, 2) : args.widths;
      spec.depth = args.t;
      spec.pad_bits = args.pad;
      spec.seed = args.seed;
    }
    const auto scenario = make_scenario(spec);
    const JointEntropyCheck entropy =
        joint_entropy_check(*scenario, NoiseStrength(args.p), scenario->declared_depth());
    const ReplacementGap gap = replacement_gap(*scenario, NoiseStrength(args.p));
    json j;
    j["scenario"] = spec.name;
    j["p"] = args.p;
    j["total_bits"] = scenario->total_bits();
    j["depth"] = scenario->declared_depth();
    j["s_joint"] = gap.s_joint;
    j["entropy_lower_bound"] = entropy.lower_bound;
    j["entropy_pass"] = entropy.pass;
    j["kl_bits"] = gap.kl_bits;
    j["kl_nats"] = gap.kl_nats;
    j["one_norm"] = gap.one_norm;
    j["pinsker_rhs"] = gap.pinsker_rhs;
    if (args.p > 0 && args.p < 1) {
      // the two published threshold constants differ by a factor of two;
      // report both, prefer neither
      j["depth_threshold_thmC1"] =
          advantage_depth_threshold(scenario->total_bits(), args.p, ThresholdVariant::thmC1);
      j["depth_threshold_thmC2"] =
          advantage_depth_threshold(scenario->total_bits(), args.p, ThresholdVariant::thmC2);
    }
    std::cout << j.dump(2) << "\n";
    return entropy.pass ? 0 : kExitCheckFailed;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qubit_cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }
}

struct LightconeArgs {
  std::string circuit_path;
  int cut = 0;
  std::vector<int> block;
};

int run_lightcone(const LightconeArgs& args) {
  Circuit circuit;
  try {
    circuit = load_circuit(args.circuit_path);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const ValidationReport report = validate_circuit(circuit);
  if (!report.ok()) {
    std::cerr << "invalid circuit:\n" << report.summary();
    return kExitValidation;
  }
  const Bipartition part = make_cut(circuit, args.cut, args.block);
  const ConeReport cone = boundary_cone(circuit, part);
  std::cout << "support size " << cone.support.size() << ", entanglement bound "
            << depth_entanglement_bound(circuit, part) << " bits\n";
  std::cout << cone_report_to_json_text(cone) << "\n";
  return 0;
}

struct EntangleArgs {
  std::string circuit_path;
  double p = 0;
  int cut = 0;
  std::vector<int> block;
  std::uint64_t seed = 0;
  int restarts = 8;
  int components = 0;
  int iterations = 200;
};

int run_entangle(const EntangleArgs& args) {
  Circuit circuit;
  try {
    circuit = load_circuit(args.circuit_path);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const ValidationReport report = validate_circuit(circuit);
  if (!report.ok()) {
    std::cerr << "invalid circuit:\n" << report.summary();
    return kExitValidation;
  }
  try {
    const Bipartition part = make_cut(circuit, args.cut, args.block);
    const DensityMatrix state =
        evolve(circuit, NoiseStrength(args.p), false, qubit_cap_from_env()).final_state;
    ErSearchConfig config;
    config.restarts = args.restarts;
    config.seed = args.seed;
    config.components = args.components;
    config.iterations = args.iterations;
    const ErSearchResult search = er_upper_via_search(state, part, config);
    const double max_mixed = er_upper_via_max_mixed(state);
    json j;
    j["p"] = args.p;
    j["cut_size_a"] = part.size_a();
    j["er_upper_search"] = search.bound;
    j["er_upper_max_mixed"] = max_mixed;
    j["mutual_information"] = mutual_information(state, part);
    j["witness_components"] = search.witness.components.size();
    j["witness_assembly_error"] = witness_assembly_error(search.witness);
    j["cone_bound"] = depth_entanglement_bound(circuit, part);
    const bool ok =
        search.bound <= max_mixed + 1e-9 && witness_assembly_error(search.witness) <= 1e-10;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : kExitCheckFailed;
  } catch (const qubit_cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

struct EstimateArgs {
  double t1 = 0;
  double tg = 0;
  std::string label;
};

int run_estimate(const EstimateArgs& args) {
  const NoiseEstimate est = estimate_p({args.t1, args.tg, args.label});
  std::printf("p = T_g/T_1 = %.3e\n", est.p);
  std::printf("rounds to %.0e at one significant figure\n", round_to_one_sig_fig(est.p));
  std::cout << "unit note: both times are read in seconds; two-qubit gate times on hardware are\n"
               "ns-scale even where datasheets label the column in us, so check the exponent.\n";
  if (est.unit_warning)
    std::printf(
        "warning: T_g/T_1 = %.6g exceeds 1, the two times cannot share a unit; p clamped to 1\n",
        est.raw_ratio);
  json j;
  j["t1_seconds"] = args.t1;
  j["tg_seconds"] = args.tg;
  j["p"] = est.p;
  j["p_one_sig_fig"] = round_to_one_sig_fig(est.p);
  j["unit_warning"] = est.unit_warning;
  if (!args.label.empty()) j["label"] = args.label;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisy-device simulator and bound calculator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate =
      app.add_subcommand("simulate", "evolve a circuit file and report per-layer quantities");
  simulate->add_option("--circuit", sim.circuit_path, "circuit file (json)")->required();
  simulate->add_option("--p", sim.p, "depolarizing strength")->check(CLI::Range(0.0, 1.0))->required();
  simulate->add_option("--cut", sim.cut, "chain cut (default n/2)");
  simulate->add_option("--block", sim.block, "grid block rows cols")->expected(2);
  simulate->add_option("--out", sim.out_path, "write the per-layer table as csv");

  CurveArgs curve;
  auto* curvecmd = app.add_subcommand("curve", "entanglement ceiling versus qubit count");
  curvecmd->add_option("--n-min", curve.n_min)->check(CLI::Range(2, 1 << 20));
  curvecmd->add_option("--n-max", curve.n_max)->required();
  curvecmd->add_option("--p", curve.p_list, "noise strengths")->required();
  curvecmd->add_option("--topology", curve.topology)->check(CLI::IsMember({"chain", "grid"}));
  curvecmd->add_option("--out", curve.out_path, "csv output path");

  BoundsArgs bounds;
  auto* boundscmd = app.add_subcommand("bounds", "closed-form bounds for one (n, p)");
  boundscmd->add_option("--n", bounds.n)->required();
  boundscmd->add_option("--p", bounds.p)->required();
  boundscmd->add_option("--t", bounds.t, "depth for the decay bound");
  boundscmd->add_option("--T", bounds.runtime, "algorithm runtime for depth thresholds");

  ShearerArgs shearer;
  auto* shearercmd = app.add_subcommand("shearer", "randomized subset-entropy audit");
  shearercmd->add_option("--n", shearer.n)->check(CLI::Range(1, 4))->required();
  shearercmd->add_option("--trials", shearer.trials)->required();
  shearercmd->add_option("--seed", shearer.seed)->required();

  HybridArgs hybrid;
  auto* hybridcmd = app.add_subcommand("hybrid", "adaptive-scenario entropy and replacement gaps");
  hybridcmd
      ->add_option("--scenario", hybrid.scenario,
                   "file or builtin (parity, adaptive-copy, coin-pad, random-adaptive)")
      ->required();
  hybridcmd->add_option("--p", hybrid.p)->check(CLI::Range(0.0, 1.0))->required();
  hybridcmd->add_option("--q", hybrid.q, "rounds for builtin scenarios");
  hybridcmd->add_option("--n", hybrid.widths, "per-round widths");
  hybridcmd->add_option("--t", hybrid.t, "circuit depth");
  hybridcmd->add_option("--pad", hybrid.pad, "coin-pad bits");
  hybridcmd->add_option("--seed", hybrid.seed, "seed for random-adaptive");

  LightconeArgs lightcone;
  auto* lightconecmd = app.add_subcommand("lightcone", "boundary cone of a circuit across a cut");
  lightconecmd->add_option("--circuit", lightcone.circuit_path)->required();
  lightconecmd->add_option("--cut", lightcone.cut, "chain cut (default n/2)");
  lightconecmd->add_option("--block", lightcone.block, "grid block rows cols")->expected(2);

  EntangleArgs entangle;
  auto* entanglecmd = app.add_subcommand("entangle", "certified entanglement upper bounds");
  entanglecmd->add_option("--circuit", entangle.circuit_path)->required();
  entanglecmd->add_option("--p", entangle.p)->check(CLI::Range(0.0, 1.0))->required();
  entanglecmd->add_option("--cut", entangle.cut, "chain cut (default n/2)");
  entanglecmd->add_option("--block", entangle.block, "grid block rows cols")->expected(2);
  entanglecmd->add_option("--seed", entangle.seed)->required();
  entanglecmd->add_option("--restarts", entangle.restarts);
  entanglecmd->add_option("--components", entangle.components);
  entanglecmd->add_option("--iters", entangle.iterations);

  EstimateArgs estimate;
  auto* estimatecmd = app.add_subcommand("estimate-p", "noise strength from device times");
  estimatecmd->add_option("--t1", estimate.t1, "coherence time in seconds")->required();
  estimatecmd->add_option("--tg", estimate.tg, "two-qubit gate time in seconds")->required();
  estimatecmd->add_option("--label", estimate.label);

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (curvecmd->parsed()) return run_curve(curve);
    if (boundscmd->parsed()) return run_bounds(bounds);
    if (shearercmd->parsed()) return run_shearer(shearer);
    if (hybridcmd->parsed()) return run_hybrid(hybrid);
    if (lightconecmd->parsed()) return run_lightcone(lightcone);
    if (entanglecmd->parsed()) return run_entangle(entangle);
    if (estimatecmd->parsed()) return run_estimate(estimate);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return 0;
}
