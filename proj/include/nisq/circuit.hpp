#pragma once

#include <string>
#include <vector>

#include "nisq/gates.hpp"
#include "nisq/topology.hpp"

namespace nisq {

/// A two-qubit gate on the ordered pair (a, b); the 4x4 unitary is written in
/// the |b_a b_b> basis with qubit `a` the most significant bit.
struct Gate {
  int a = 0;
  int b = 1;
  Matrix4 unitary = Matrix4::Identity();
  std::string name;  // optional label ("CNOT", "H", ... or empty for raw matrices)

  static Gate from_name(const std::string& name, int a, int b);
  static Gate from_matrix(const Matrix4& u, int a, int b, std::string label = "");
};

struct GateLayer {
  std::vector<Gate> gates;
};

struct Circuit {
  Topology topology;
  std::vector<GateLayer> layers;

  int num_qubits() const { return topology.n; }
  int depth() const { return static_cast<int>(layers.size()); }

  // circuit truncated to its first `t` layers
  Circuit prefix(int t) const;
};

struct Violation {
  int layer = -1;  // -1: circuit-level problem
  int gate = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks gate unitarity (1e-10), per-layer qubit disjointness, index ranges and
// topology adjacency. Violations carry layer/gate indices.
ValidationReport validate_circuit(const Circuit& circuit);

}  // namespace nisq
