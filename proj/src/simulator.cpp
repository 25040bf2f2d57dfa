#include "nisq/simulator.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace nisq {

OutcomeDistribution OutcomeDistribution::uniform(int n) {
  OutcomeDistribution d;
  d.n = n;
  const long size = 1L << n;
  d.probs = Eigen::VectorXd::Constant(size, 1.0 / static_cast<double>(size));
  return d;
}

OutcomeDistribution OutcomeDistribution::point_mass(int n, long index) {
  OutcomeDistribution d;
  d.n = n;
  d.probs = Eigen::VectorXd::Zero(1L << n);
  d.probs(index) = 1.0;
  return d;
}

namespace {

// insert a zero bit at position `pos` (counted from the least significant end)
long insert_zero_bit(long x, int pos) {
  const long low = x & ((1L << pos) - 1);
  return ((x >> pos) << (pos + 1)) | low;
}

// Indices of the four basis states reachable by varying the gate's qubit pair
// inside the fixed remainder `base`; sub-index order |b_a b_b>.
std::array<long, 4> pair_indices(long base, int pos_a, int pos_b) {
  return {base, base | (1L << pos_b), base | (1L << pos_a), base | (1L << pos_a) | (1L << pos_b)};
}

void check_gate_range(const DensityMatrix& state, const Gate& gate) {
  if (gate.a < 0 || gate.a >= state.n || gate.b < 0 || gate.b >= state.n || gate.a == gate.b)
    throw std::invalid_argument("gate qubits out of range for state with n=" + std::to_string(state.n));
}

}  // namespace

DensityMatrix apply_gate(const DensityMatrix& state, const Gate& gate) {
  check_gate_range(state, gate);
  const int n = state.n;
  const int pos_a = n - 1 - gate.a;
  const int pos_b = n - 1 - gate.b;
  const int lo = std::min(pos_a, pos_b), hi = std::max(pos_a, pos_b);
  const long groups = 1L << (n - 2);
  const Matrix4& u = gate.unitary;
  const Matrix4 u_adj = u.adjoint();

  DensityMatrix out;
  out.n = n;
  out.mat = state.mat;
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> rows(4, state.dim());
  for (long z = 0; z < groups; ++z) {
    const long base = insert_zero_bit(insert_zero_bit(z, lo), hi);
    const auto idx = pair_indices(base, pos_a, pos_b);
    for (int s = 0; s < 4; ++s) rows.row(s) = out.mat.row(idx[s]);
    rows = (u * rows).eval();
    for (int s = 0; s < 4; ++s) out.mat.row(idx[s]) = rows.row(s);
  }
  Eigen::Matrix<Complex, Eigen::Dynamic, 4> cols(state.dim(), 4);
  for (long z = 0; z < groups; ++z) {
    const long base = insert_zero_bit(insert_zero_bit(z, lo), hi);
    const auto idx = pair_indices(base, pos_a, pos_b);
    for (int s = 0; s < 4; ++s) cols.col(s) = out.mat.col(idx[s]);
    cols = (cols * u_adj).eval();
    for (int s = 0; s < 4; ++s) out.mat.col(idx[s]) = cols.col(s);
  }
  return out;
}

DensityMatrix apply_unitary_layer(const DensityMatrix& state, const GateLayer& layer) {
  DensityMatrix out = state;
  for (const auto& g : layer.gates) out = apply_gate(out, g);
  return out;
}

DensityMatrix apply_depolarizing_single(const DensityMatrix& state, int q, NoiseStrength p) {
  if (q < 0 || q >= state.n) throw std::invalid_argument("depolarizing qubit out of range");
  if (p.p == 0.0) return state;
  const long d = state.dim();
  const long mask = 1L << (state.n - 1 - q);
  const double keep = 1.0 - p.p;
  const double half = 0.5 * p.p;

  DensityMatrix out;
  out.n = state.n;
  out.mat = keep * state.mat;
  for (long r = 0; r < d; ++r) {
    if (r & mask) continue;
    for (long c = 0; c < d; ++c) {
      if (c & mask) continue;
      const Complex t = state.mat(r, c) + state.mat(r | mask, c | mask);
      out.mat(r, c) += half * t;
      out.mat(r | mask, c | mask) += half * t;
    }
  }
  return out;
}

DensityMatrix apply_depolarizing_all(const DensityMatrix& state, NoiseStrength p) {
  DensityMatrix out = state;
  for (int q = 0; q < state.n; ++q) out = apply_depolarizing_single(out, q, p);
  return out;
}

EvolveResult evolve(const Circuit& circuit, NoiseStrength p, bool record, int cap) {
  const int n = circuit.num_qubits();
  if (n > cap)
    throw qubit_cap_error("circuit has " + std::to_string(n) + " qubits, cap is " +
                          std::to_string(cap) + " (dense memory grows as 4^n)");
  EvolveResult result;
  result.final_state = DensityMatrix::zero_state(n);
  for (const auto& layer : circuit.layers) {
    result.final_state = apply_unitary_layer(result.final_state, layer);
    result.final_state = apply_depolarizing_all(result.final_state, p);
    if (record) result.trajectory.push_back(result.final_state);
  }
  return result;
}

OutcomeDistribution output_distribution(const DensityMatrix& state) {
  OutcomeDistribution d;
  d.n = state.n;
  d.probs = state.mat.diagonal().real();
  const double total = d.probs.sum();
  if (std::abs(total - 1.0) >= 1e-6)
    throw std::runtime_error("diagonal sums to " + std::to_string(total) +
                             ", state is corrupted");
  for (long i = 0; i < d.probs.size(); ++i) d.probs(i) = std::max(d.probs(i), 0.0);
  d.probs /= d.probs.sum();
  return d;
}

std::string bitstring(long index, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q)
    if ((index >> (n - 1 - q)) & 1) s[q] = '1';
  return s;
}

std::vector<std::string> sample_output(const DensityMatrix& state, std::uint64_t seed, int shots) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const OutcomeDistribution d = output_distribution(state);
  Eigen::VectorXd cdf(d.probs.size());
  double acc = 0;
  for (long i = 0; i < d.probs.size(); ++i) {
    acc += d.probs(i);
    cdf(i) = acc;
  }
  std::mt19937_64 engine(seed);
  std::vector<std::string> out;
  out.reserve(shots);
  for (int s = 0; s < shots; ++s) {
    // top 53 bits -> double in [0, 1); engine output is platform-stable
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    long lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
      const long mid = (lo + hi) / 2;
      if (u < cdf(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    out.push_back(bitstring(lo, d.n));
  }
  return out;
}

}  // namespace nisq
