#include "nisq/random.hpp"

#include <cmath>

namespace nisq {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(master ^ splitmix64(counter + 0x51b365c8ed20a7d1ULL));
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  // modulo bias is irrelevant at these range sizes
  return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(2.0 * M_PI * u2);
  return r * std::cos(2.0 * M_PI * u2);
}

DensityMatrix random_density_matrix(int n, Rng& rng) {
  const long d = 1L << n;
  MatrixX g(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  MatrixX w = g * g.adjoint();
  DensityMatrix state;
  state.n = n;
  state.mat = w / w.trace().real();
  return state;
}

DensityMatrix random_density_matrix(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(n, rng);
}

DensityMatrix random_pure_state(int n, Rng& rng) {
  const long d = 1L << n;
  Eigen::VectorXcd v(d);
  for (long i = 0; i < d; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  return DensityMatrix::pure(n, v);
}

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng) {
  MatrixX g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<MatrixX> qr(g);
  MatrixX q = qr.householderQ();
  MatrixX r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is Haar
  for (int i = 0; i < dim; ++i) {
    const Complex diag = r(i, i);
    q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

Circuit random_chain_circuit(int n, int depth, std::uint64_t seed) {
  Rng rng(seed);
  Circuit circuit;
  circuit.topology = Topology::chain(n);
  for (int t = 0; t < depth; ++t) {
    GateLayer layer;
    const int offset = rng.uniform_int(0, 1);
    for (int q = offset; q + 1 < n; q += 2) {
      if (rng.uniform() < 0.85) {
        Matrix4 u = haar_unitary(4, rng);
        layer.gates.push_back(Gate::from_matrix(u, q, q + 1));
      }
    }
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

}  // namespace nisq
