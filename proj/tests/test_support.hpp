#pragma once

#include <array>

#include "nisq/circuit.hpp"
#include "nisq/density_matrix.hpp"
#include "nisq/simulator.hpp"

namespace nisq::testing {

inline Circuit bell_prep_circuit() {
  Circuit c;
  c.topology = Topology::chain(2);
  c.layers.push_back({{Gate::from_name("H", 0, 1)}});
  c.layers.push_back({{Gate::from_name("CNOT", 0, 1)}});
  return c;
}

inline DensityMatrix bell_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1.0;
  return DensityMatrix::pure(2, v);
}

inline DensityMatrix ghz_state(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1L << n);
  v(0) = v((1L << n) - 1) = 1.0;
  return DensityMatrix::pure(n, v);
}

inline double max_abs_diff(const MatrixX& a, const MatrixX& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Independent route for the depolarizing channel: Kraus operators
// {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z} applied per qubit.
inline DensityMatrix depolarize_via_kraus(const DensityMatrix& state, double p) {
  const int n = state.n;
  std::array<Matrix2, 4> kraus = {gates::identity2() * std::sqrt(1.0 - 0.75 * p),
                                  gates::pauli_x() * std::sqrt(0.25 * p),
                                  gates::pauli_y() * std::sqrt(0.25 * p),
                                  gates::pauli_z() * std::sqrt(0.25 * p)};
  MatrixX acc = state.mat;
  for (int q = 0; q < n; ++q) {
    MatrixX next = MatrixX::Zero(state.dim(), state.dim());
    for (const auto& k : kraus) {
      // embed k on qubit q
      MatrixX full = MatrixX::Identity(1, 1);
      for (int r = 0; r < n; ++r) {
        const MatrixX& factor = (r == q) ? static_cast<MatrixX>(k)
                                         : static_cast<MatrixX>(Matrix2::Identity());
        MatrixX grown(full.rows() * 2, full.cols() * 2);
        for (long i = 0; i < full.rows(); ++i)
          for (long j = 0; j < full.cols(); ++j)
            grown.block(2 * i, 2 * j, 2, 2) = full(i, j) * factor;
        full = std::move(grown);
      }
      next += full * acc * full.adjoint();
    }
    acc = std::move(next);
  }
  DensityMatrix out;
  out.n = n;
  out.mat = std::move(acc);
  return out;
}

}  // namespace nisq::testing
