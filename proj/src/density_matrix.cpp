#include "nisq/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <set>
#include <stdexcept>

namespace nisq {

DensityMatrix DensityMatrix::zero_state(int n) {
  if (n < 1) throw std::invalid_argument("state needs n >= 1");
  DensityMatrix s;
  s.n = n;
  s.mat = MatrixX::Zero(1L << n, 1L << n);
  s.mat(0, 0) = 1.0;
  return s;
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 1) throw std::invalid_argument("state needs n >= 1");
  DensityMatrix s;
  s.n = n;
  const long d = 1L << n;
  s.mat = MatrixX::Identity(d, d) / static_cast<double>(d);
  return s;
}

DensityMatrix DensityMatrix::pure(int n, const Eigen::VectorXcd& amplitudes) {
  if (amplitudes.size() != (1L << n)) throw std::invalid_argument("amplitude vector has wrong length");
  Eigen::VectorXcd v = amplitudes / amplitudes.norm();
  DensityMatrix s;
  s.n = n;
  s.mat = v * v.adjoint();
  return s;
}

StateInvariantReport check_state_invariants(const DensityMatrix& state) {
  StateInvariantReport r;
  r.hermiticity_error = (state.mat - state.mat.adjoint()).cwiseAbs().maxCoeff();
  r.trace_error = std::abs(state.mat.trace() - Complex(1.0, 0.0));
  r.min_eigenvalue = spectrum(state).minCoeff();
  r.ok = r.hermiticity_error <= 1e-9 && r.trace_error <= 1e-9 && r.min_eigenvalue >= -1e-9;
  return r;
}

Eigen::VectorXd spectrum(const DensityMatrix& state) {
  MatrixX herm = 0.5 * (state.mat + state.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixX> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::VectorXd clamped_spectrum(const DensityMatrix& state) {
  Eigen::VectorXd w = spectrum(state);
  for (long i = 0; i < w.size(); ++i) w(i) = std::max(w(i), 0.0);
  const double total = w.sum();
  if (total > 0) w /= total;
  return w;
}

DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<int>& keep) {
  const int n = state.n;
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::set<int> uniq(keep.begin(), keep.end());
  if (uniq.size() != keep.size()) throw std::invalid_argument("partial_trace: duplicate index in keep set");
  for (int q : uniq)
    if (q < 0 || q >= n) throw std::invalid_argument("partial_trace: index out of range");

  std::vector<int> kept(uniq.begin(), uniq.end());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!uniq.count(q)) traced.push_back(q);

  const int k = static_cast<int>(kept.size());
  const int m = n - k;
  // bit position (from the least significant end) of qubit q
  auto bitpos = [n](int q) { return n - 1 - q; };

  DensityMatrix out;
  out.n = k;
  out.mat = MatrixX::Zero(1L << k, 1L << k);
  const long dk = 1L << k, dm = 1L << m;
  for (long e = 0; e < dm; ++e) {
    long env = 0;
    for (int t = 0; t < m; ++t)
      if ((e >> (m - 1 - t)) & 1) env |= 1L << bitpos(traced[t]);
    for (long r = 0; r < dk; ++r) {
      long row = env;
      for (int t = 0; t < k; ++t)
        if ((r >> (k - 1 - t)) & 1) row |= 1L << bitpos(kept[t]);
      for (long c = 0; c < dk; ++c) {
        long col = env;
        for (int t = 0; t < k; ++t)
          if ((c >> (k - 1 - t)) & 1) col |= 1L << bitpos(kept[t]);
        out.mat(r, c) += state.mat(row, col);
      }
    }
  }
  return out;
}

}  // namespace nisq
