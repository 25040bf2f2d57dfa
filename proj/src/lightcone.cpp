#include "nisq/lightcone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nisq {

bool side_a_contains_chain_end(const Circuit& circuit, const Bipartition& part) {
  if (circuit.topology.kind != Topology::Kind::chain) return false;
  return part.in_a(0) || part.in_a(circuit.num_qubits() - 1);
}

ConeReport boundary_cone(const Circuit& circuit, const Bipartition& part) {
  if (part.n != circuit.num_qubits())
    throw std::invalid_argument("bipartition does not match the circuit's qubit count");
  const int t = circuit.depth();
  ConeReport report;
  std::set<int> support;
  for (int layer = t - 1; layer >= 0; --layer) {
    for (const auto& g : circuit.layers[layer].gates) {
      const bool straddles = part.in_a(g.a) != part.in_a(g.b);
      const bool touches = support.count(g.a) || support.count(g.b);
      if (straddles || touches) {
        support.insert(g.a);
        support.insert(g.b);
      }
    }
    report.per_layer.emplace_back(support.begin(), support.end());
  }
  report.support.assign(support.begin(), support.end());
  int in_a = 0;
  for (int q : report.support)
    if (part.in_a(q)) ++in_a;
  report.bound_generic = std::min(in_a, static_cast<int>(report.support.size()) - in_a);
  report.bound_end_anchored = report.bound_generic;
  if (side_a_contains_chain_end(circuit, part))
    report.bound_end_anchored = std::min(report.bound_end_anchored, t);
  return report;
}

double depth_entanglement_bound(const Circuit& circuit, const Bipartition& part) {
  const ConeReport report = boundary_cone(circuit, part);
  const int t = circuit.depth();
  const int worst_case = side_a_contains_chain_end(circuit, part) ? t : 2 * t;
  return static_cast<double>(std::min(report.bound_generic, worst_case));
}

}  // namespace nisq
