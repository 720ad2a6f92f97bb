// Copyright 2026 The murlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file qcore.hpp
/// Dense linear-algebra substrate for small multi-qubit systems: operators,
/// states, Bloch parameterizations, and the validation predicates the rest
/// of the library builds on. Dimensions are restricted to 2, 4 and 8
/// (one to three qubits); everything is dense and exact up to the stated
/// tolerances.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace murlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using BlochVector = Eigen::Vector3d;

/// Entrywise tolerance used for Hermiticity, normalization and completeness
/// checks throughout the library.
inline constexpr double kTolHermitian = 1e-12;

/// Eigenvalue tolerance used for positive-semidefiniteness checks.
inline constexpr double kTolPositive = 1e-10;

/// Outcome values closer than this are treated as one outcome.
inline constexpr double kValueMergeTol = 1e-9;

/// Thrown when a documented precondition on user-supplied data is violated.
/// The CLI maps this exception to exit code 2 (invalid input); any other
/// exception maps to exit code 1 (computation failure).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// @name Fixed operators
/// @{
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
Matrix identity(Eigen::Index dim);
/// @}

/// @name Predicates
/// All predicates are tolerance-based and never throw.
/// @{
bool is_hermitian(const Matrix& m, double tol = kTolHermitian);
bool is_unitary(const Matrix& m, double tol = kTolHermitian);
/// Entrywise Hermitian within @p herm_tol and smallest eigenvalue above
/// -`tol`.
bool is_positive_semidefinite(const Matrix& m, double tol = kTolPositive);
/// Positive semidefinite and so is `identity - m`.
bool is_effect(const Matrix& m, double tol = kTolPositive);
/// Hermitian, idempotent projector within @p tol.
bool is_projector(const Matrix& m, double tol = kTolPositive);
/// @}

/// Smallest eigenvalue of a Hermitian matrix (closed form for dimension 2).
/// The anti-Hermitian part of @p m is discarded.
double min_eigenvalue_hermitian(const Matrix& m);

/// Kronecker product x (x) y. The combined dimension must stay within the
/// three-qubit budget (<= 8), otherwise a precondition_error is thrown.
Matrix tensor(const Matrix& x, const Matrix& y);
Ket tensor(const Ket& x, const Ket& y);

/// Partial trace over the qubit factors *not* listed in @p keep. Factors are
/// indexed from the left: index 0 owns the most significant bit of the
/// computational-basis label. @p keep must be strictly increasing.
Matrix partial_trace(const Matrix& m, const std::vector<int>& keep);

/// The qubit effect (1/2)(I + sign c.sigma) for |sign| = 1 and ||c|| <= 1.
Matrix bloch_to_effect(const BlochVector& c, int sign = +1);

/// The Hermitian 2x2 operator (1/2)(weight I + r.sigma).
Matrix bloch_operator(double weight, const BlochVector& r);

/// Bloch decomposition of a Hermitian 2x2 operator: weight = tr E and
/// vector_i = tr(E sigma_i), so that bloch_operator(weight, vector) == E.
struct EffectBloch {
  double weight = 0.0;
  BlochVector vector = BlochVector::Zero();
};
EffectBloch effect_bloch(const Matrix& e);

/// Density operator on 1-3 qubits. The constructor enforces Hermiticity
/// (kTolHermitian), positivity (kTolPositive) and unit trace (kTolHermitian);
/// violations raise precondition_error.
class QuantumState {
 public:
  explicit QuantumState(Matrix density);

  /// |psi><psi| for a ket normalized within kTolHermitian (on |psi|^2).
  static QuantumState from_ket(const Ket& psi);

  /// Qubit state (1/2)(I + r.sigma) for ||r|| <= 1.
  static QuantumState from_bloch(const BlochVector& r);

  /// The maximally mixed state I/dim.
  static QuantumState maximally_mixed(Eigen::Index dim);

  const Matrix& density() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

 private:
  Matrix rho_;
};

/// tr(rho x). For Hermitian x the imaginary part is a rounding artifact;
/// real_expectation asserts it is below kTolHermitian and drops it.
Complex expectation(const QuantumState& rho, const Matrix& x);
double real_expectation(const QuantumState& rho, const Matrix& x);

}  // namespace murlab
