#pragma once

#include <cstdint>
#include <random>

#include "nisq/circuit.hpp"
#include "nisq/density_matrix.hpp"

namespace nisq {

std::uint64_t splitmix64(std::uint64_t x);

// counter-mode seed splitting: independent stream per (master, counter)
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter);

/// Seeded generator with platform-stable primitive draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);        // inclusive bounds
  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0;
};

// Full-rank Wishart state G G^dagger / Tr for complex Gaussian G
DensityMatrix random_density_matrix(int n, Rng& rng);
DensityMatrix random_density_matrix(int n, std::uint64_t seed);

DensityMatrix random_pure_state(int n, Rng& rng);

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng);

// Random chain circuit: each layer picks a random subset of disjoint adjacent
// pairs (brickwork offset chosen at random) with Haar 4x4 gates.
Circuit random_chain_circuit(int n, int depth, std::uint64_t seed);

}  // namespace nisq
