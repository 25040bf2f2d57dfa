#pragma once

#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/infotheory.hpp"

namespace nisq {

/// Backward light-cone of the cut: the qubits whose gates can still reach the
/// A / complement boundary, swept from the last layer to the first.
struct ConeReport {
  std::vector<int> support;                 // sorted union over the sweep
  std::vector<std::vector<int>> per_layer;  // snapshots, layer t down to 1
  int bound_generic = 0;                    // min(|S ∩ A|, |S ∩ B|)
  int bound_end_anchored = 0;               // additionally <= t when A holds a chain end
};

// A gate joins the cone iff it straddles the cut or touches the current
// support; straddling is decided by qubit membership, so chains and grid
// blocks share the same sweep.
ConeReport boundary_cone(const Circuit& circuit, const Bipartition& part);

// min(exact cone bound, t for end-anchored A, 2t otherwise); upper bounds any
// entanglement monotone across the cut at the circuit's depth.
double depth_entanglement_bound(const Circuit& circuit, const Bipartition& part);

// true iff side A contains qubit 0 or qubit n-1 of a chain
bool side_a_contains_chain_end(const Circuit& circuit, const Bipartition& part);

}  // namespace nisq
