#include "nisq/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nisq {

using nlohmann::json;

namespace {

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed file: ") + e.what());
  }
}

Topology topology_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error("topology needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "chain") return Topology::chain(j.at("n").get<int>());
  if (kind == "full") return Topology::full(j.at("n").get<int>());
  if (kind == "grid") return Topology::grid(j.at("rows").get<int>(), j.at("cols").get<int>());
  throw parse_error("unknown topology kind: " + kind);
}

Matrix4 matrix_from_json(const json& j, int layer, int gate) {
  const std::string where =
      " (layer " + std::to_string(layer) + ", gate " + std::to_string(gate) + ")";
  if (!j.is_array() || j.size() != 4) throw parse_error("gate matrix must be 4x4" + where);
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || row.size() != 4) throw parse_error("gate matrix must be 4x4" + where);
    for (int c = 0; c < 4; ++c) {
      const auto& entry = row.at(c);
      if (entry.is_number()) {
        m(r, c) = Complex(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      } else {
        throw parse_error("matrix entries must be numbers or [re, im] pairs" + where);
      }
    }
  }
  return m;
}

}  // namespace

Circuit circuit_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("topology") || !j.contains("layers"))
    throw parse_error("circuit file needs topology and layers");
  Circuit circuit;
  circuit.topology = topology_from_json(j.at("topology"));
  const auto& layers = j.at("layers");
  if (!layers.is_array()) throw parse_error("layers must be an array");
  for (int li = 0; li < static_cast<int>(layers.size()); ++li) {
    const auto& jlayer = layers.at(li);
    if (!jlayer.is_array()) throw parse_error("layer " + std::to_string(li) + " must be an array");
    GateLayer layer;
    for (int gi = 0; gi < static_cast<int>(jlayer.size()); ++gi) {
      const auto& jgate = jlayer.at(gi);
      const std::string where =
          " (layer " + std::to_string(li) + ", gate " + std::to_string(gi) + ")";
      if (!jgate.contains("gate") || !jgate.contains("qubits"))
        throw parse_error("gate needs gate and qubits fields" + where);
      const auto& jq = jgate.at("qubits");
      if (!jq.is_array() || jq.size() != 2)
        throw parse_error("qubits must be an [i, j] pair" + where);
      const int a = jq.at(0).get<int>();
      const int b = jq.at(1).get<int>();
      const auto& spec = jgate.at("gate");
      if (spec.is_string()) {
        const std::string name = spec.get<std::string>();
        if (!gates::named(name)) throw parse_error("unknown gate name: " + name + where);
        layer.gates.push_back(Gate::from_name(name, a, b));
      } else {
        layer.gates.push_back(Gate::from_matrix(matrix_from_json(spec, li, gi), a, b));
      }
    }
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

Circuit load_circuit(const std::string& path) { return circuit_from_json_text(file_text(path)); }

std::string circuit_to_json_text(const Circuit& circuit) {
  json j;
  json topo;
  topo["kind"] = circuit.topology.kind_name();
  if (circuit.topology.kind == Topology::Kind::grid) {
    topo["rows"] = circuit.topology.rows;
    topo["cols"] = circuit.topology.cols;
  } else {
    topo["n"] = circuit.topology.n;
  }
  j["topology"] = topo;
  j["layers"] = json::array();
  for (const auto& layer : circuit.layers) {
    json jlayer = json::array();
    for (const auto& g : layer.gates) {
      json jgate;
      if (!g.name.empty()) {
        jgate["gate"] = g.name;
      } else {
        json m = json::array();
        for (int r = 0; r < 4; ++r) {
          json row = json::array();
          for (int c = 0; c < 4; ++c)
            row.push_back({g.unitary(r, c).real(), g.unitary(r, c).imag()});
          m.push_back(row);
        }
        jgate["gate"] = m;
      }
      jgate["qubits"] = {g.a, g.b};
      jlayer.push_back(jgate);
    }
    j["layers"].push_back(jlayer);
  }
  return j.dump(2);
}

std::string cone_report_to_json_text(const ConeReport& report) {
  json j;
  j["support"] = report.support;
  j["per_layer"] = report.per_layer;
  j["bound_generic"] = report.bound_generic;
  j["bound_end_anchored"] = report.bound_end_anchored;
  return j.dump(2);
}

ScenarioSpec scenario_spec_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("scenario")) throw parse_error("scenario file needs a scenario name");
  ScenarioSpec spec;
  spec.name = j.at("scenario").get<std::string>();
  if (j.contains("n")) {
    if (j.at("n").is_array()) {
      spec.widths = j.at("n").get<std::vector<int>>();
    } else {
      const int w = j.at("n").get<int>();
      const int q = j.value("q", 1);
      spec.widths.assign(q, w);
    }
  }
  spec.depth = j.value("t", 1);
  spec.pad_bits = j.value("pad", 0);
  spec.seed = j.value("seed", static_cast<std::uint64_t>(0));
  return spec;
}

ScenarioSpec load_scenario_spec(const std::string& path) {
  return scenario_spec_from_json_text(file_text(path));
}

std::unique_ptr<Scenario> make_scenario(const ScenarioSpec& spec) {
  if (spec.name == "parity") return make_parity_scenario(spec.widths, spec.depth);
  if (spec.name == "adaptive-copy") {
    if (spec.widths.empty()) throw parse_error("adaptive-copy needs a width");
    return make_adaptive_copy_scenario(spec.widths.front(), spec.depth);
  }
  if (spec.name == "coin-pad")
    return make_coin_pad_scenario(spec.widths, spec.depth, spec.pad_bits > 0 ? spec.pad_bits : 1);
  if (spec.name == "random-adaptive")
    return make_random_adaptive_scenario(spec.seed, spec.widths, spec.depth);
  throw parse_error("unknown scenario: " + spec.name);
}

}  // namespace nisq
