#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nisq/bounds.hpp"
#include "nisq/circuit_io.hpp"
#include "nisq/entanglement.hpp"
#include "nisq/hybrid.hpp"
#include "nisq/infotheory.hpp"
#include "nisq/lightcone.hpp"
#include "nisq/random.hpp"
#include "nisq/shearer.hpp"
#include "nisq/simulator.hpp"

namespace py = pybind11;
using namespace nisq;

namespace {

OutcomeDistribution dist_from_array(const Eigen::VectorXd& probs) {
  OutcomeDistribution d;
  long n = 0;
  while ((1L << n) < probs.size()) ++n;
  if ((1L << n) != probs.size())
    throw std::invalid_argument("probability vector length must be a power of two");
  d.n = static_cast<int>(n);
  d.probs = probs;
  return d;
}

py::dict gap_to_dict(const ReplacementGap& gap) {
  py::dict d;
  d["s_joint"] = gap.s_joint;
  d["kl_bits"] = gap.kl_bits;
  d["kl_nats"] = gap.kl_nats;
  d["one_norm"] = gap.one_norm;
  d["pinsker_rhs"] = gap.pinsker_rhs;
  return d;
}

}  // namespace

PYBIND11_MODULE(nisqlim, m) {
  m.doc() = "exact noisy-device simulation with information and entanglement bounds";

  py::register_exception<qubit_cap_error>(m, "QubitCapError");
  py::register_exception<parse_error>(m, "ParseError");

  py::class_<Topology>(m, "Topology")
      .def_static("chain", &Topology::chain, py::arg("n"))
      .def_static("grid", &Topology::grid, py::arg("rows"), py::arg("cols"))
      .def_static("full", &Topology::full, py::arg("n"))
      .def_readonly("n", &Topology::n)
      .def("adjacent", &Topology::adjacent)
      .def("__repr__", [](const Topology& t) {
        return "Topology(" + t.kind_name() + ", n=" + std::to_string(t.n) + ")";
      });

  py::class_<Gate>(m, "Gate")
      .def_static("from_name", &Gate::from_name, py::arg("name"), py::arg("a"), py::arg("b"))
      .def_static(
          "from_matrix",
          [](const Matrix4& u, int a, int b) { return Gate::from_matrix(u, a, b); },
          py::arg("unitary"), py::arg("a"), py::arg("b"))
      .def_readonly("a", &Gate::a)
      .def_readonly("b", &Gate::b)
      .def_readonly("name", &Gate::name)
      .def_property_readonly("unitary", [](const Gate& g) { return g.unitary; });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init([](const Topology& topology, const std::vector<std::vector<Gate>>& layers) {
             Circuit c;
             c.topology = topology;
             for (const auto& gates : layers) c.layers.push_back({gates});
             return c;
           }),
           py::arg("topology"), py::arg("layers"))
      .def_static("from_json", &circuit_from_json_text, py::arg("text"))
      .def_static("load", &load_circuit, py::arg("path"))
      .def("to_json", &circuit_to_json_text)
      .def_property_readonly("n", &Circuit::num_qubits)
      .def_property_readonly("depth", &Circuit::depth)
      .def("prefix", &Circuit::prefix, py::arg("t"))
      .def("validate", [](const Circuit& c) {
        std::vector<std::string> messages;
        for (const auto& v : validate_circuit(c).violations)
          messages.push_back("layer " + std::to_string(v.layer) + " gate " +
                             std::to_string(v.gate) + ": " + v.message);
        return messages;
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_static("zero_state", &DensityMatrix::zero_state, py::arg("n"))
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed, py::arg("n"))
      .def_static("pure", &DensityMatrix::pure, py::arg("n"), py::arg("amplitudes"))
      .def(py::init([](int n, const MatrixX& mat) {
             DensityMatrix s;
             s.n = n;
             s.mat = mat;
             return s;
           }),
           py::arg("n"), py::arg("matrix"))
      .def_readonly("n", &DensityMatrix::n)
      .def_property_readonly("matrix", [](const DensityMatrix& s) { return s.mat; })
      .def("__repr__", [](const DensityMatrix& s) {
        return "DensityMatrix(n=" + std::to_string(s.n) + ")";
      });

  py::class_<Bipartition>(m, "Bipartition")
      .def_static("chain_cut", &Bipartition::chain_cut, py::arg("n"), py::arg("cut"))
      .def_static("grid_block", &Bipartition::grid_block, py::arg("grid"), py::arg("rows_a"),
                  py::arg("cols_a"))
      .def_readonly("a", &Bipartition::a)
      .def("complement", &Bipartition::complement);

  // device model
  m.def(
      "evolve",
      [](const Circuit& circuit, double p, bool record, int cap) {
        EvolveResult r = evolve(circuit, NoiseStrength(p), record, cap);
        return py::make_tuple(r.final_state, r.trajectory);
      },
      py::arg("circuit"), py::arg("p"), py::arg("record") = false,
      py::arg("cap") = kDefaultQubitCap);
  m.def("apply_unitary_layer", [](const DensityMatrix& s, const std::vector<Gate>& gates) {
    return apply_unitary_layer(s, {gates});
  });
  m.def("apply_depolarizing_all",
        [](const DensityMatrix& s, double p) { return apply_depolarizing_all(s, NoiseStrength(p)); });
  m.def("output_distribution",
        [](const DensityMatrix& s) { return output_distribution(s).probs; });
  m.def("sample_output", &sample_output, py::arg("state"), py::arg("seed"), py::arg("shots"));
  m.def("partial_trace", &partial_trace, py::arg("state"), py::arg("keep"));

  // information functionals (bits)
  m.def("von_neumann_entropy", &von_neumann_entropy);
  m.def("relative_entropy", &relative_entropy);
  m.def("distance_to_max_mixed", &distance_to_max_mixed);
  m.def("dephase", &dephase);
  m.def("mutual_information", &mutual_information);
  m.def("shannon_entropy",
        [](const Eigen::VectorXd& probs) { return shannon_entropy(dist_from_array(probs)); });
  m.def(
      "kl_divergence",
      [](const Eigen::VectorXd& p, const Eigen::VectorXd& q, bool bits) {
        return kl_divergence(dist_from_array(p), dist_from_array(q),
                             bits ? LogBase::bits : LogBase::nats);
      },
      py::arg("p"), py::arg("q"), py::arg("bits") = true);
  m.def("one_norm_distance", [](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    return one_norm_distance(dist_from_array(p), dist_from_array(q));
  });

  // subset-entropy inequality
  m.def("min_coverage", [](int n, const std::vector<std::vector<int>>& subsets) {
    return min_coverage(SubsetFamily::make(n, subsets));
  });
  m.def("shearer_slack",
        [](const DensityMatrix& s, const std::vector<std::vector<int>>& subsets, int t) {
          return shearer_slack(s, SubsetFamily::make(s.n, subsets), t);
        });
  m.def("randomized_shearer_audit", &randomized_shearer_audit, py::arg("n"), py::arg("trials"),
        py::arg("seed"));

  // entanglement bounds
  m.def("entanglement_entropy_pure", &entanglement_entropy_pure);
  m.def("er_upper_via_max_mixed", &er_upper_via_max_mixed);
  m.def(
      "er_upper_via_search",
      [](const DensityMatrix& s, const Bipartition& part, int components, int restarts,
         std::uint64_t seed, int iterations) {
        ErSearchConfig config{components, restarts, seed, iterations};
        const ErSearchResult r = er_upper_via_search(s, part, config);
        return py::make_tuple(r.bound, r.witness.assembled);
      },
      py::arg("state"), py::arg("part"), py::arg("components") = 0, py::arg("restarts") = 8,
      py::arg("seed") = 0, py::arg("iterations") = 200);

  // light cone
  m.def("boundary_cone", [](const Circuit& c, const Bipartition& part) {
    const ConeReport r = boundary_cone(c, part);
    py::dict d;
    d["support"] = r.support;
    d["per_layer"] = r.per_layer;
    d["bound_generic"] = r.bound_generic;
    d["bound_end_anchored"] = r.bound_end_anchored;
    return d;
  });
  m.def("depth_entanglement_bound", &depth_entanglement_bound);

  // closed-form bounds
  m.def("decay_bound", &decay_bound);
  m.def("t_star_1d", &t_star_1d);
  m.def("ent_bound_1d", &ent_bound_1d);
  m.def("ent_bound_2d", [](int n, double p) {
    const EntBound2d b = ent_bound_2d(n, p);
    return py::make_tuple(b.value, b.certified);
  });
  m.def(
      "advantage_depth_threshold",
      [](double T, double p, const std::string& variant) {
        if (variant != "thmC1" && variant != "thmC2")
          throw std::invalid_argument("variant must be thmC1 or thmC2");
        return advantage_depth_threshold(
            T, p, variant == "thmC1" ? ThresholdVariant::thmC1 : ThresholdVariant::thmC2);
      },
      py::arg("T"), py::arg("p"), py::arg("variant") = "thmC2");
  m.def(
      "estimate_p",
      [](double t1, double tg) {
        const NoiseEstimate e = estimate_p({t1, tg, ""});
        return py::make_tuple(e.p, e.unit_warning);
      },
      py::arg("t1"), py::arg("tg"));

  // hybrid scenarios
  m.def(
      "hybrid_report",
      [](const std::string& name, const std::vector<int>& widths, int depth, double p,
         int pad_bits, std::uint64_t seed) {
        ScenarioSpec spec{name, widths, depth, pad_bits, seed};
        const auto scenario = make_scenario(spec);
        const JointEntropyCheck check =
            joint_entropy_check(*scenario, NoiseStrength(p), scenario->declared_depth());
        py::dict d = gap_to_dict(replacement_gap(*scenario, NoiseStrength(p)));
        d["total_bits"] = scenario->total_bits();
        d["entropy_lower_bound"] = check.lower_bound;
        d["entropy_pass"] = check.pass;
        return d;
      },
      py::arg("scenario"), py::arg("widths"), py::arg("depth"), py::arg("p"),
      py::arg("pad_bits") = 1, py::arg("seed") = 0);
  m.def("majority_amplify", &majority_amplify);
  m.def("majority_reps_needed", &majority_reps_needed);
  m.def(
      "smallest_factor_via_decision",
      [](std::uint64_t n, const std::function<bool(std::uint64_t, std::uint64_t)>& oracle) {
        const FactorSearchResult r = smallest_factor_via_decision(n, oracle);
        py::dict d;
        d["factor"] = r.factor ? py::cast(*r.factor) : py::none();
        d["oracle_calls"] = r.oracle_calls;
        return d;
      },
      py::arg("n"), py::arg("oracle"));

  // seeded generators
  m.def("random_chain_circuit", &random_chain_circuit, py::arg("n"), py::arg("depth"),
        py::arg("seed"));
  m.def("random_density_matrix",
        [](int n, std::uint64_t seed) { return random_density_matrix(n, seed); });
}
