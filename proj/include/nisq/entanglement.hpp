#pragma once

#include <cstdint>
#include <vector>

#include "nisq/density_matrix.hpp"
#include "nisq/infotheory.hpp"

namespace nisq {

/// Explicit separable state certifying an upper bound on the relative entropy
/// of entanglement: a convex mixture of exact A x B product states.
struct SeparableComponent {
  double weight = 0;
  MatrixX factor_a;  // density matrix on side A (in A's sorted qubit order)
  MatrixX factor_b;  // density matrix on side B
};

struct SeparableWitness {
  Bipartition part;
  std::vector<SeparableComponent> components;
  MatrixX assembled;  // weighted sum of the embedded products
};

// Builds the full 2^n x 2^n matrix of factor_a (x) factor_b with side A's
// qubits at the positions listed in the bipartition.
MatrixX embed_product(const MatrixX& factor_a, const MatrixX& factor_b, const Bipartition& part);

SeparableWitness assemble_witness(const Bipartition& part, std::vector<SeparableComponent> components);

// max entrywise deviation between `assembled` and the re-summed components
double witness_assembly_error(const SeparableWitness& witness);

// S(rho_A) for a pure input (largest eigenvalue >= 1 - 1e-8); exact ground
// truth for the relative entropy of entanglement of pure states.
double entanglement_entropy_pure(const DensityMatrix& state, const Bipartition& part);

// D(rho || I/2^n): valid upper bound since the maximally mixed state is separable.
double er_upper_via_max_mixed(const DensityMatrix& state);

struct ErSearchConfig {
  int components = 0;   // 0: default 2^(2 min(|A|,|B|))
  int restarts = 8;
  std::uint64_t seed = 0;
  int iterations = 200;
};

struct ErSearchResult {
  double bound = 0;
  SeparableWitness witness;
};

// Multi-restart coordinate search for min D(rho || sigma) over mixtures of
// product states. Deterministic candidates are always in the pool: the
// maximally mixed state (so bound <= er_upper_via_max_mixed), the dephased
// input, and the product of marginals. Total qubits capped at 6.
ErSearchResult er_upper_via_search(const DensityMatrix& state, const Bipartition& part,
                                   const ErSearchConfig& config = {});

}  // namespace nisq
