#include "nisq/infotheory.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nisq {

namespace {
constexpr double kLn2 = 0.69314718055994530942;

double entropy_bits(const Eigen::VectorXd& weights) {
  double s = 0;
  for (long i = 0; i < weights.size(); ++i) {
    const double w = weights(i);
    if (w > 0) s -= w * std::log2(w);
  }
  return s;
}
}  // namespace

Bipartition Bipartition::chain_cut(int n, int cut) {
  if (n < 2) throw std::invalid_argument("bipartition needs n >= 2");
  if (cut < 1 || cut > n - 1) throw std::invalid_argument("chain cut must satisfy 1 <= cut <= n-1");
  Bipartition part;
  part.n = n;
  part.a.resize(cut);
  for (int q = 0; q < cut; ++q) part.a[q] = q;
  return part;
}

Bipartition Bipartition::grid_block(const Topology& grid, int rows_a, int cols_a) {
  if (grid.kind != Topology::Kind::grid) throw std::invalid_argument("grid_block needs a grid topology");
  if (rows_a < 1 || cols_a < 1 || rows_a > grid.rows || cols_a > grid.cols)
    throw std::invalid_argument("block does not fit the lattice");
  if (rows_a == grid.rows && cols_a == grid.cols)
    throw std::invalid_argument("block must leave a nonempty complement");
  Bipartition part;
  part.n = grid.n;
  for (int r = 0; r < rows_a; ++r)
    for (int c = 0; c < cols_a; ++c) part.a.push_back(r * grid.cols + c);
  return part;
}

bool Bipartition::in_a(int q) const { return std::binary_search(a.begin(), a.end(), q); }

std::vector<int> Bipartition::complement() const {
  std::vector<int> b;
  for (int q = 0; q < n; ++q)
    if (!in_a(q)) b.push_back(q);
  return b;
}

double von_neumann_entropy(const DensityMatrix& state) {
  return entropy_bits(clamped_spectrum(state));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.n != sigma.n) throw std::invalid_argument("relative_entropy: dimension mismatch");
  const MatrixX herm = 0.5 * (sigma.mat + sigma.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixX> solver(herm);
  const Eigen::VectorXd svals = solver.eigenvalues();
  const MatrixX svecs = solver.eigenvectors();

  // rho's diagonal in sigma's eigenbasis
  Eigen::VectorXd overlap(svals.size());
  for (long i = 0; i < svals.size(); ++i)
    overlap(i) = std::real(Complex(svecs.col(i).adjoint() * rho.mat * svecs.col(i)));

  double outside = 0;
  double cross = 0;  // Tr rho log2 sigma on the support
  for (long i = 0; i < svals.size(); ++i) {
    if (svals(i) >= 1e-10)
      cross += std::max(overlap(i), 0.0) * std::log2(svals(i));
    else
      outside += std::max(overlap(i), 0.0);
  }
  if (outside > 1e-8) return std::numeric_limits<double>::infinity();

  const Eigen::VectorXd rvals = clamped_spectrum(rho);
  double self = 0;  // Tr rho log2 rho
  for (long i = 0; i < rvals.size(); ++i)
    if (rvals(i) > 0) self += rvals(i) * std::log2(rvals(i));
  return self - cross;
}

double distance_to_max_mixed(const DensityMatrix& state) {
  return static_cast<double>(state.n) - von_neumann_entropy(state);
}

double shannon_entropy(const OutcomeDistribution& dist) { return entropy_bits(dist.probs); }

DensityMatrix dephase(const DensityMatrix& state) {
  DensityMatrix out;
  out.n = state.n;
  out.mat = state.mat.diagonal().asDiagonal();
  return out;
}

double mutual_information(const DensityMatrix& state, const Bipartition& part) {
  if (part.n != state.n) throw std::invalid_argument("bipartition does not match state size");
  const double sa = von_neumann_entropy(partial_trace(state, part.a));
  const double sb = von_neumann_entropy(partial_trace(state, part.complement()));
  const double s = von_neumann_entropy(state);
  return std::max(sa + sb - s, 0.0);
}

double one_norm_distance(const OutcomeDistribution& d1, const OutcomeDistribution& d2) {
  if (d1.probs.size() != d2.probs.size())
    throw std::invalid_argument("one_norm_distance: length mismatch");
  return (d1.probs - d2.probs).cwiseAbs().sum();
}

double kl_divergence(const OutcomeDistribution& d1, const OutcomeDistribution& d2, LogBase base) {
  if (d1.probs.size() != d2.probs.size()) throw std::invalid_argument("kl_divergence: length mismatch");
  double bits = 0;
  for (long i = 0; i < d1.probs.size(); ++i) {
    const double p = d1.probs(i), q = d2.probs(i);
    if (p <= 0) continue;
    if (q <= 0) return std::numeric_limits<double>::infinity();
    bits += p * std::log2(p / q);
  }
  return base == LogBase::bits ? bits : bits * kLn2;
}

}  // namespace nisq
