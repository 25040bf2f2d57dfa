#pragma once

#include <vector>

#include "nisq/density_matrix.hpp"
#include "nisq/simulator.hpp"
#include "nisq/topology.hpp"

namespace nisq {

/// Contiguous split (A, complement). On a chain A = {0..cut-1}; on a grid A is
/// a rows_a x cols_a block anchored at the (0, 0) corner.
struct Bipartition {
  int n = 0;
  std::vector<int> a;  // sorted qubit indices of side A, 1 <= |A| <= n-1

  static Bipartition chain_cut(int n, int cut);
  static Bipartition grid_block(const Topology& grid, int rows_a, int cols_a);

  bool in_a(int q) const;
  std::vector<int> complement() const;
  int size_a() const { return static_cast<int>(a.size()); }
  int size_b() const { return n - size_a(); }
};

// All entropies and divergences are in bits (log base 2).

double von_neumann_entropy(const DensityMatrix& state);

// Tr rho (log rho - log sigma) on sigma's support; returns +infinity when
// rho carries more than 1e-8 weight outside the >= 1e-10 eigenspace of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// n - S(rho) = D(rho || I/2^n)
double distance_to_max_mixed(const DensityMatrix& state);

double shannon_entropy(const OutcomeDistribution& dist);

// zeroes every off-diagonal entry in the computational basis
DensityMatrix dephase(const DensityMatrix& state);

// S(rho_A) + S(rho_B) - S(rho), clamped at zero
double mutual_information(const DensityMatrix& state, const Bipartition& part);

double one_norm_distance(const OutcomeDistribution& d1, const OutcomeDistribution& d2);

enum class LogBase { bits, nats };

// Classical KL divergence; +infinity on support violation.
double kl_divergence(const OutcomeDistribution& d1, const OutcomeDistribution& d2,
                     LogBase base = LogBase::bits);

}  // namespace nisq
