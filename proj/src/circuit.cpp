#include "nisq/circuit.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace nisq {

Gate Gate::from_name(const std::string& name, int a, int b) {
  auto u = gates::named(name);
  if (!u) throw std::invalid_argument("unknown gate name: " + name);
  Gate g;
  g.a = a;
  g.b = b;
  g.unitary = *u;
  g.name = name;
  return g;
}

Gate Gate::from_matrix(const Matrix4& u, int a, int b, std::string label) {
  Gate g;
  g.a = a;
  g.b = b;
  g.unitary = u;
  g.name = std::move(label);
  return g;
}

Circuit Circuit::prefix(int t) const {
  if (t < 0 || t > depth()) throw std::invalid_argument("prefix depth out of range");
  Circuit c;
  c.topology = topology;
  c.layers.assign(layers.begin(), layers.begin() + t);
  return c;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "layer " << v.layer;
    if (v.gate >= 0) os << " gate " << v.gate;
    os << ": " << v.message << "\n";
  }
  return os.str();
}

ValidationReport validate_circuit(const Circuit& circuit) {
  ValidationReport report;
  const int n = circuit.num_qubits();
  if (n < 1) {
    report.violations.push_back({-1, -1, "topology has no qubits"});
    return report;
  }
  for (int li = 0; li < circuit.depth(); ++li) {
    const auto& layer = circuit.layers[li];
    std::set<int> used;
    for (int gi = 0; gi < static_cast<int>(layer.gates.size()); ++gi) {
      const auto& g = layer.gates[gi];
      if (g.a == g.b) {
        report.violations.push_back({li, gi, "gate acts twice on qubit " + std::to_string(g.a)});
        continue;
      }
      if (g.a < 0 || g.a >= n || g.b < 0 || g.b >= n) {
        report.violations.push_back({li, gi, "qubit index out of range for n=" + std::to_string(n)});
        continue;
      }
      for (int q : {g.a, g.b}) {
        if (!used.insert(q).second)
          report.violations.push_back(
              {li, gi, "qubit " + std::to_string(q) + " already used in this layer"});
      }
      if (!circuit.topology.adjacent(g.a, g.b))
        report.violations.push_back({li, gi,
                                     "qubits (" + std::to_string(g.a) + ", " + std::to_string(g.b) +
                                         ") are not adjacent on " + circuit.topology.kind_name()});
      if (!gates::is_unitary(g.unitary))
        report.violations.push_back({li, gi, "gate matrix is not unitary within 1e-10"});
    }
  }
  return report;
}

}  // namespace nisq
