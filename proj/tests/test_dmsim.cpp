#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nisq/bounds.hpp"
#include "nisq/infotheory.hpp"
#include "nisq/random.hpp"
#include "nisq/simulator.hpp"
#include "test_support.hpp"

using namespace nisq;
using namespace nisq::testing;

TEST_CASE("validate_circuit accepts a canonical adjacent gate") {
  Circuit c;
  c.topology = Topology::chain(2);
  c.layers.push_back({{Gate::from_name("CNOT", 0, 1)}});
  CHECK(validate_circuit(c).ok());
}

TEST_CASE("validate_circuit flags non-neighbors on a chain") {
  Circuit c;
  c.topology = Topology::chain(3);
  c.layers.push_back({{Gate::from_name("CNOT", 0, 2)}});
  const auto report = validate_circuit(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].layer == 0);
  CHECK(report.violations[0].gate == 0);
  CHECK(report.violations[0].message.find("adjacent") != std::string::npos);
}

TEST_CASE("validate_circuit flags a qubit used twice in one layer") {
  Circuit c;
  c.topology = Topology::chain(3);
  c.layers.push_back({{Gate::from_name("CNOT", 0, 1), Gate::from_name("CZ", 1, 2)}});
  const auto report = validate_circuit(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].message.find("qubit 1") != std::string::npos);
}

TEST_CASE("validate_circuit flags a non-unitary matrix") {
  Circuit c;
  c.topology = Topology::chain(2);
  c.layers.push_back({{Gate::from_matrix(Matrix4::Zero(), 0, 1)}});
  CHECK_FALSE(validate_circuit(c).ok());
}

TEST_CASE("grid and full adjacency") {
  const Topology grid = Topology::grid(2, 3);
  CHECK(grid.adjacent(0, 1));
  CHECK(grid.adjacent(0, 3));
  CHECK_FALSE(grid.adjacent(0, 4));
  CHECK_FALSE(grid.adjacent(2, 3));  // row wrap is not a lattice edge
  CHECK(Topology::full(5).adjacent(0, 4));
}

TEST_CASE("H then CNOT prepares the Bell state") {
  DensityMatrix s = DensityMatrix::zero_state(2);
  const Circuit c = bell_prep_circuit();
  s = apply_unitary_layer(s, c.layers[0]);
  s = apply_unitary_layer(s, c.layers[1]);
  CHECK(max_abs_diff(s.mat, bell_state().mat) < 1e-12);
}

TEST_CASE("empty layer leaves the state unchanged") {
  const DensityMatrix s = random_density_matrix(3, 7u);
  const DensityMatrix t = apply_unitary_layer(s, GateLayer{});
  CHECK(max_abs_diff(s.mat, t.mat) == 0.0);
}

TEST_CASE("CZ acts trivially when the partner is |0>") {
  DensityMatrix s = DensityMatrix::zero_state(2);
  s = apply_unitary_layer(s, {{Gate::from_name("H", 0, 1)}});  // |+0>
  const DensityMatrix t = apply_unitary_layer(s, {{Gate::from_name("CZ", 0, 1)}});
  CHECK(max_abs_diff(s.mat, t.mat) < 1e-12);
}

TEST_CASE("gate application matches the dense conjugation route") {
  Rng rng(11u);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    const DensityMatrix s = random_density_matrix(n, rng);
    const Matrix4 u = haar_unitary(4, rng);
    const int a = rng.uniform_int(0, n - 1);
    int b = rng.uniform_int(0, n - 2);
    if (b >= a) ++b;
    Circuit c;
    c.topology = Topology::full(n);

    // dense oracle: build the full 2^n unitary by summing basis transitions
    const long d = 1L << n;
    MatrixX full = MatrixX::Zero(d, d);
    const int pa = n - 1 - a, pb = n - 1 - b;
    for (long col = 0; col < d; ++col) {
      const int sub = 2 * ((col >> pa) & 1) + ((col >> pb) & 1);
      for (int out = 0; out < 4; ++out) {
        long row = col & ~((1L << pa) | (1L << pb));
        if ((out >> 1) & 1) row |= 1L << pa;
        if (out & 1) row |= 1L << pb;
        full(row, col) = u(out, sub);
      }
    }
    const MatrixX expected = full * s.mat * full.adjoint();
    const DensityMatrix got = apply_gate(s, Gate::from_matrix(u, a, b));
    CHECK(max_abs_diff(got.mat, expected) < 1e-12);
  }
}

TEST_CASE("depolarizing with p=0 is the identity channel") {
  const DensityMatrix s = random_density_matrix(3, 3u);
  CHECK(max_abs_diff(apply_depolarizing_all(s, NoiseStrength(0)).mat, s.mat) == 0.0);
}

TEST_CASE("depolarizing with p=1 lands exactly on the maximally mixed state") {
  const DensityMatrix s = random_density_matrix(3, 5u);
  const DensityMatrix out = apply_depolarizing_all(s, NoiseStrength(1));
  CHECK(max_abs_diff(out.mat, DensityMatrix::maximally_mixed(3).mat) <= 1e-12);
}

TEST_CASE("single-qubit depolarizing at p=0.5 on |0><0|") {
  const DensityMatrix out =
      apply_depolarizing_all(DensityMatrix::zero_state(1), NoiseStrength(0.5));
  CHECK(std::abs(out.mat(0, 0).real() - 0.75) < 1e-15);
  CHECK(std::abs(out.mat(1, 1).real() - 0.25) < 1e-15);
  CHECK(std::abs(out.mat(0, 1)) < 1e-15);
}

TEST_CASE("depolarizing agrees with the Kraus route") {
  Rng rng(13u);
  for (int trial = 0; trial < 8; ++trial) {
    const DensityMatrix s = random_density_matrix(3, rng);
    const double p = rng.uniform();
    const DensityMatrix via_channel = apply_depolarizing_all(s, NoiseStrength(p));
    const DensityMatrix via_kraus = depolarize_via_kraus(s, p);
    CHECK(max_abs_diff(via_channel.mat, via_kraus.mat) < 1e-12);
  }
}

TEST_CASE("per-qubit depolarizing commutes across disjoint qubits") {
  const DensityMatrix s = random_density_matrix(3, 17u);
  const NoiseStrength p(0.3);
  DensityMatrix forward = s, backward = s;
  for (int q = 0; q < 3; ++q) forward = apply_depolarizing_single(forward, q, p);
  for (int q = 2; q >= 0; --q) backward = apply_depolarizing_single(backward, q, p);
  CHECK(max_abs_diff(forward.mat, backward.mat) < 1e-12);
}

TEST_CASE("two-qubit depolarizing matches the noise-pattern expansion") {
  const DensityMatrix s = random_density_matrix(2, 23u);
  const double p = 0.37;
  const MatrixX i2 = Matrix2::Identity() * 0.5;
  const MatrixX r0 = partial_trace(s, {0}).mat;
  const MatrixX r1 = partial_trace(s, {1}).mat;
  auto kron = [](const MatrixX& a, const MatrixX& b) {
    MatrixX m(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
      for (long j = 0; j < a.cols(); ++j) m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return m;
  };
  const MatrixX expansion = (1 - p) * (1 - p) * s.mat + (1 - p) * p * kron(r0, i2) +
                            p * (1 - p) * kron(i2, r1) + p * p * kron(i2, i2);
  CHECK(max_abs_diff(apply_depolarizing_all(s, NoiseStrength(p)).mat, expansion) < 1e-12);
}

TEST_CASE("evolve with no layers returns the all-zeros pure state") {
  Circuit c;
  c.topology = Topology::chain(3);
  const EvolveResult r = evolve(c, NoiseStrength(0.3), true);
  CHECK(max_abs_diff(r.final_state.mat, DensityMatrix::zero_state(3).mat) == 0.0);
  CHECK(r.trajectory.empty());
}

TEST_CASE("one identity layer at p=1 gives I/2") {
  Circuit c;
  c.topology = Topology::chain(1);
  c.layers.resize(1);
  const EvolveResult r = evolve(c, NoiseStrength(1));
  CHECK(max_abs_diff(r.final_state.mat, DensityMatrix::maximally_mixed(1).mat) <= 1e-12);
}

TEST_CASE("noisy Bell preparation respects the decay bound") {
  const EvolveResult r = evolve(bell_prep_circuit(), NoiseStrength(0.2), true);
  CHECK(std::abs(r.final_state.mat.trace().real() - 1.0) < 1e-12);
  REQUIRE(r.trajectory.size() == 2);
  CHECK(distance_to_max_mixed(r.trajectory[0]) <= decay_bound(2, 0.2, 1) + 1e-7);
  CHECK(distance_to_max_mixed(r.trajectory[1]) <= decay_bound(2, 0.2, 2) + 1e-7);
}

TEST_CASE("trajectory states keep the density-matrix invariants") {
  const Circuit c = random_chain_circuit(4, 6, 99u);
  const EvolveResult r = evolve(c, NoiseStrength(0.1), true);
  REQUIRE(r.trajectory.size() == 6);
  for (const auto& state : r.trajectory) {
    const auto report = check_state_invariants(state);
    CHECK(report.ok);
  }
}

TEST_CASE("evolve refuses circuits past the qubit cap") {
  Circuit c;
  c.topology = Topology::chain(13);
  CHECK_THROWS_AS(evolve(c, NoiseStrength(0.1)), qubit_cap_error);
  CHECK_NOTHROW(evolve(c, NoiseStrength(0.1), false, 13));
}

TEST_CASE("unitary layers preserve the spectrum") {
  Rng rng(31u);
  const DensityMatrix s = random_density_matrix(3, rng);
  GateLayer layer{{Gate::from_matrix(haar_unitary(4, rng), 0, 1)}};
  const Eigen::VectorXd before = spectrum(s);
  const Eigen::VectorXd after = spectrum(apply_unitary_layer(s, layer));
  CHECK((before - after).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("output distribution of the maximally mixed state is uniform") {
  const OutcomeDistribution d = output_distribution(DensityMatrix::maximally_mixed(2));
  for (int i = 0; i < 4; ++i) CHECK(d.probs(i) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("Bell statistics put half the mass on 00 and half on 11") {
  const OutcomeDistribution d = output_distribution(bell_state());
  CHECK(d.probs(0) == doctest::Approx(0.5));
  CHECK(d.probs(1) == doctest::Approx(0.0));
  CHECK(d.probs(2) == doctest::Approx(0.0));
  CHECK(d.probs(3) == doctest::Approx(0.5));
}

TEST_CASE("output distribution reads the diagonal") {
  const DensityMatrix s =
      apply_depolarizing_all(DensityMatrix::zero_state(1), NoiseStrength(0.5));
  const OutcomeDistribution d = output_distribution(s);
  CHECK(d.probs(0) == doctest::Approx(0.75));
  CHECK(d.probs(1) == doctest::Approx(0.25));
}

TEST_CASE("corrupted diagonals are rejected") {
  DensityMatrix s = DensityMatrix::zero_state(1);
  s.mat(0, 0) = 0.9;
  CHECK_THROWS_AS(output_distribution(s), std::runtime_error);
}

TEST_CASE("permuting the basis with X gates permutes the output distribution") {
  const DensityMatrix s = random_density_matrix(2, 41u);
  const OutcomeDistribution before = output_distribution(s);
  const Gate xx = Gate::from_matrix(gates::kron2(gates::pauli_x(), gates::pauli_x()), 0, 1);
  const OutcomeDistribution after = output_distribution(apply_gate(s, xx));
  for (long i = 0; i < 4; ++i) CHECK(after.probs(i) == doctest::Approx(before.probs(3 - i)));
}

TEST_CASE("sampling a computational basis state is deterministic") {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(1) = 1.0;  // |01>
  const DensityMatrix s = DensityMatrix::pure(2, v);
  const auto shots = sample_output(s, 123u, 5);
  REQUIRE(shots.size() == 5);
  for (const auto& shot : shots) CHECK(shot == "01");
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  const DensityMatrix s = bell_state();
  CHECK(sample_output(s, 9000u, 50) == sample_output(s, 9000u, 50));
}

TEST_CASE("fair-coin sampling concentrates near one half") {
  const DensityMatrix s = DensityMatrix::maximally_mixed(1);
  const auto shots = sample_output(s, 4242u, 100000);
  const long zeros = std::count(shots.begin(), shots.end(), "0");
  const double freq = static_cast<double>(zeros) / 100000.0;
  CHECK(freq > 0.49);
  CHECK(freq < 0.51);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const DensityMatrix r = partial_trace(bell_state(), {0});
  CHECK(max_abs_diff(r.mat, DensityMatrix::maximally_mixed(1).mat) < 1e-12);
}

TEST_CASE("partial trace of a product state recovers the factor") {
  Rng rng(55u);
  const DensityMatrix a = random_density_matrix(1, rng);
  const DensityMatrix b = random_density_matrix(1, rng);
  DensityMatrix prod;
  prod.n = 2;
  prod.mat = MatrixX(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) prod.mat.block(2 * i, 2 * j, 2, 2) = a.mat(i, j) * b.mat;
  CHECK(max_abs_diff(partial_trace(prod, {0}).mat, a.mat) < 1e-12);
  CHECK(max_abs_diff(partial_trace(prod, {1}).mat, b.mat) < 1e-12);
}

TEST_CASE("keeping every qubit is the identity") {
  const DensityMatrix s = random_density_matrix(2, 77u);
  CHECK(max_abs_diff(partial_trace(s, {0, 1}).mat, s.mat) < 1e-15);
}

TEST_CASE("partial trace rejects bad keep sets") {
  const DensityMatrix s = random_density_matrix(2, 78u);
  CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {0, 0}), std::invalid_argument);
}

TEST_CASE("bitstrings read qubit 0 first") {
  CHECK(bitstring(0, 3) == "000");
  CHECK(bitstring(4, 3) == "100");
  CHECK(bitstring(1, 3) == "001");
}
