#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>

namespace nisq {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

namespace gates {

Matrix2 identity2();
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 phase_s();
Matrix2 phase_t();

// Two-qubit matrices in the |q_first q_second> basis, first qubit most significant.
Matrix4 cnot();
Matrix4 cz();
Matrix4 swap();

Matrix4 kron2(const Matrix2& a, const Matrix2& b);

// u acting on the first qubit of the pair, identity on the second
Matrix4 lift_single(const Matrix2& u);

bool is_single_qubit_name(const std::string& name);
bool is_two_qubit_name(const std::string& name);

// Named gate as a 4x4 pair matrix; single-qubit names are lifted. Empty if unknown.
std::optional<Matrix4> named(const std::string& name);

bool is_unitary(const Matrix4& u, double tol = 1e-10);

}  // namespace gates
}  // namespace nisq
