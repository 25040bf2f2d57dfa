#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/density_matrix.hpp"

namespace nisq {

struct qubit_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Probability vector over the 2^n computational basis strings.
struct OutcomeDistribution {
  int n = 0;
  Eigen::VectorXd probs;

  long size() const { return probs.size(); }
  static OutcomeDistribution uniform(int n);
  static OutcomeDistribution point_mass(int n, long index);
};

// Per-qubit depolarizing strength, a probability in [0, 1].
struct NoiseStrength {
  double p = 0;
  NoiseStrength() = default;
  explicit NoiseStrength(double p_) : p(p_) {
    if (!(p_ >= 0.0 && p_ <= 1.0)) throw std::invalid_argument("noise strength must lie in [0, 1]");
  }
};

// rho -> U rho U^dagger for one two-qubit gate
DensityMatrix apply_gate(const DensityMatrix& state, const Gate& gate);

// tensor-product action of all gates in the layer (disjoint qubits)
DensityMatrix apply_unitary_layer(const DensityMatrix& state, const GateLayer& layer);

// single-qubit channel rho -> (1-p) rho + p I/2 on qubit q
DensityMatrix apply_depolarizing_single(const DensityMatrix& state, int q, NoiseStrength p);

// independent depolarizing on every qubit
DensityMatrix apply_depolarizing_all(const DensityMatrix& state, NoiseStrength p);

struct EvolveResult {
  DensityMatrix final_state;
  // state after each noise layer: rho(1) ... rho(t); empty unless recorded
  std::vector<DensityMatrix> trajectory;
};

inline constexpr int kDefaultQubitCap = 12;

// Alternates gate layers and full-register noise starting from |0...0><0...0|;
// noise follows every layer including the last. Throws qubit_cap_error when n
// exceeds `cap` (dense matrices grow as 4^n).
EvolveResult evolve(const Circuit& circuit, NoiseStrength p, bool record = false,
                    int cap = kDefaultQubitCap);

// Diagonal of the state in the computational basis, clamped at zero and
// renormalized; throws if the diagonal sum strays from 1 by 1e-6 or more.
OutcomeDistribution output_distribution(const DensityMatrix& state);

// i.i.d. draws from output_distribution, deterministic given the seed
std::vector<std::string> sample_output(const DensityMatrix& state, std::uint64_t seed, int shots);

std::string bitstring(long index, int n);

}  // namespace nisq
