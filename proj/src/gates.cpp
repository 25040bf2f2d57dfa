#include "nisq/gates.hpp"

#include <cmath>

namespace nisq::gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Matrix2 identity2() { return Matrix2::Identity(); }

Matrix2 hadamard() {
  Matrix2 m;
  m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return m;
}

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2 phase_s() {
  Matrix2 m;
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

Matrix2 phase_t() {
  Matrix2 m;
  m << 1, 0, 0, std::polar(1.0, M_PI / 4);
  return m;
}

Matrix4 cnot() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Matrix4 cz() {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = -1;
  return m;
}

Matrix4 swap() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Matrix4 lift_single(const Matrix2& u) { return kron2(u, identity2()); }

bool is_single_qubit_name(const std::string& name) {
  return name == "H" || name == "X" || name == "Y" || name == "Z" || name == "S" || name == "T";
}

bool is_two_qubit_name(const std::string& name) {
  return name == "CNOT" || name == "CZ" || name == "SWAP";
}

std::optional<Matrix4> named(const std::string& name) {
  if (name == "H") return lift_single(hadamard());
  if (name == "X") return lift_single(pauli_x());
  if (name == "Y") return lift_single(pauli_y());
  if (name == "Z") return lift_single(pauli_z());
  if (name == "S") return lift_single(phase_s());
  if (name == "T") return lift_single(phase_t());
  if (name == "CNOT") return cnot();
  if (name == "CZ") return cz();
  if (name == "SWAP") return swap();
  return std::nullopt;
}

bool is_unitary(const Matrix4& u, double tol) {
  return (u.adjoint() * u - Matrix4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace nisq::gates
