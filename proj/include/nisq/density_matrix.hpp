#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nisq/gates.hpp"

namespace nisq {

using MatrixX = Eigen::MatrixXcd;

/// An n-qubit state as a dense 2^n x 2^n matrix. Basis index convention:
/// qubit 0 is the most significant bit, so index b assigns qubit q the bit
/// (b >> (n-1-q)) & 1 and bitstrings read left to right as qubits 0..n-1.
struct DensityMatrix {
  int n = 0;
  MatrixX mat;

  long dim() const { return 1L << n; }

  static DensityMatrix zero_state(int n);
  static DensityMatrix maximally_mixed(int n);
  // outer product |psi><psi| of a normalized amplitude vector
  static DensityMatrix pure(int n, const Eigen::VectorXcd& amplitudes);
};

struct StateInvariantReport {
  double hermiticity_error = 0;  // max entrywise |M - M^dagger|
  double trace_error = 0;        // |Tr M - 1|
  double min_eigenvalue = 0;
  bool ok = false;
};

// Hermitian within 1e-9 entrywise, unit trace within 1e-9, eigenvalues >= -1e-9
StateInvariantReport check_state_invariants(const DensityMatrix& state);

// Eigenvalues, ascending. Computed from the Hermitian part of the matrix.
Eigen::VectorXd spectrum(const DensityMatrix& state);

// Spectrum with small negative drift clamped to zero and the result
// renormalized to unit sum, so downstream logarithms stay finite.
Eigen::VectorXd clamped_spectrum(const DensityMatrix& state);

// Reduced state on `keep` (nonempty, in-range, duplicates rejected). The kept
// qubits are reindexed in ascending order of their original labels.
DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<int>& keep);

}  // namespace nisq
