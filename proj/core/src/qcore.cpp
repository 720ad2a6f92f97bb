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

#include "murlab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace murlab {

namespace {

constexpr Complex kI{0.0, 1.0};

bool dim_supported(Eigen::Index dim) { return dim == 2 || dim == 4 || dim == 8; }

int factor_count(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw precondition_error(std::string(what) + ": matrix is not square");
  }
}

}  // namespace

const Matrix& pauli_x() {
  static const Matrix x = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  return x;
}

const Matrix& pauli_y() {
  static const Matrix y = [] {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
  }();
  return y;
}

const Matrix& pauli_z() {
  static const Matrix z = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  return z;
}

Matrix identity(Eigen::Index dim) {
  if (!dim_supported(dim)) {
    throw precondition_error("identity: dimension must be 2, 4 or 8");
  }
  return Matrix::Identity(dim, dim);
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <=
         tol;
}

double min_eigenvalue_hermitian(const Matrix& m) {
  require_square(m, "min_eigenvalue_hermitian");
  const Matrix h = 0.5 * (m + m.adjoint());
  if (h.rows() == 1) return h(0, 0).real();
  if (h.rows() == 2) {
    // Closed form: eigenvalues of [[a, b], [conj(b), d]] are
    // (a + d)/2 -+ sqrt(((a - d)/2)^2 + |b|^2).
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double off = std::abs(h(0, 1));
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), off);
    return mid - rad;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_positive_semidefinite(const Matrix& m, double tol) {
  if (!is_hermitian(m)) return false;
  return min_eigenvalue_hermitian(m) >= -tol;
}

bool is_effect(const Matrix& m, double tol) {
  if (!is_positive_semidefinite(m, tol)) return false;
  const Matrix complement = Matrix::Identity(m.rows(), m.cols()) - m;
  return min_eigenvalue_hermitian(complement) >= -tol;
}

bool is_projector(const Matrix& m, double tol) {
  if (!is_hermitian(m)) return false;
  return (m * m - m).cwiseAbs().maxCoeff() <= tol;
}

Matrix tensor(const Matrix& x, const Matrix& y) {
  require_square(x, "tensor");
  require_square(y, "tensor");
  const Eigen::Index combined = x.rows() * y.rows();
  if (combined > 8) {
    throw precondition_error(
        "tensor: combined dimension exceeds the three-qubit budget");
  }
  Matrix out(combined, x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

Ket tensor(const Ket& x, const Ket& y) {
  const Eigen::Index combined = x.size() * y.size();
  if (combined > 8) {
    throw precondition_error(
        "tensor: combined dimension exceeds the three-qubit budget");
  }
  Ket out(combined);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& keep) {
  require_square(m, "partial_trace");
  if (!dim_supported(m.rows())) {
    throw precondition_error("partial_trace: dimension must be 2, 4 or 8");
  }
  const int n = factor_count(m.rows());
  for (std::size_t b = 0; b < keep.size(); ++b) {
    if (keep[b] < 0 || keep[b] >= n) {
      throw precondition_error("partial_trace: factor index out of range");
    }
    if (b > 0 && keep[b] <= keep[b - 1]) {
      throw precondition_error(
          "partial_trace: keep indices must be strictly increasing");
    }
  }
  std::vector<int> traced;
  for (int f = 0; f < n; ++f) {
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) {
      traced.push_back(f);
    }
  }

  const Eigen::Index out_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index sum_count = Eigen::Index{1} << traced.size();
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < out_dim; ++i) {
    for (Eigen::Index j = 0; j < out_dim; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < sum_count; ++t) {
        // Recombine the kept bits of (i, j) with the summed bits t into full
        // basis labels. Factor f owns bit (n - 1 - f) of the label.
        Eigen::Index row = 0;
        Eigen::Index col = 0;
        for (std::size_t b = 0; b < keep.size(); ++b) {
          const int shift = n - 1 - keep[b];
          const int src = static_cast<int>(keep.size()) - 1 - static_cast<int>(b);
          row |= ((i >> src) & 1) << shift;
          col |= ((j >> src) & 1) << shift;
        }
        for (std::size_t b = 0; b < traced.size(); ++b) {
          const int shift = n - 1 - traced[b];
          const int src =
              static_cast<int>(traced.size()) - 1 - static_cast<int>(b);
          const Eigen::Index bit = (t >> src) & 1;
          row |= bit << shift;
          col |= bit << shift;
        }
        acc += m(row, col);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix bloch_operator(double weight, const BlochVector& r) {
  Matrix out = 0.5 * weight * Matrix::Identity(2, 2);
  out += 0.5 * (r.x() * pauli_x() + r.y() * pauli_y() + r.z() * pauli_z());
  return out;
}

Matrix bloch_to_effect(const BlochVector& c, int sign) {
  if (sign != 1 && sign != -1) {
    throw precondition_error("bloch_to_effect: sign must be +1 or -1");
  }
  if (c.norm() > 1.0 + kTolHermitian) {
    throw precondition_error(
        "bloch_to_effect: Bloch vector must lie in the unit ball");
  }
  return bloch_operator(1.0, sign * c);
}

EffectBloch effect_bloch(const Matrix& e) {
  if (e.rows() != 2 || e.cols() != 2) {
    throw precondition_error("effect_bloch: operator must be 2x2");
  }
  if (!is_hermitian(e)) {
    throw precondition_error("effect_bloch: operator must be Hermitian");
  }
  EffectBloch out;
  out.weight = e.trace().real();
  out.vector = BlochVector((e * pauli_x()).trace().real(),
                           (e * pauli_y()).trace().real(),
                           (e * pauli_z()).trace().real());
  return out;
}

QuantumState::QuantumState(Matrix density) : rho_(std::move(density)) {
  require_square(rho_, "QuantumState");
  if (!dim_supported(rho_.rows())) {
    throw precondition_error("QuantumState: dimension must be 2, 4 or 8");
  }
  if (!is_hermitian(rho_)) {
    throw precondition_error("QuantumState: density operator is not Hermitian");
  }
  if (std::abs(rho_.trace().real() - 1.0) > kTolHermitian ||
      std::abs(rho_.trace().imag()) > kTolHermitian) {
    throw precondition_error("QuantumState: trace must equal 1");
  }
  if (min_eigenvalue_hermitian(rho_) < -kTolPositive) {
    throw precondition_error(
        "QuantumState: density operator is not positive semidefinite");
  }
}

QuantumState QuantumState::from_ket(const Ket& psi) {
  if (!dim_supported(psi.size())) {
    throw precondition_error("QuantumState: dimension must be 2, 4 or 8");
  }
  if (std::abs(psi.squaredNorm() - 1.0) > kTolHermitian) {
    throw precondition_error("QuantumState: ket is not normalized");
  }
  return QuantumState(psi * psi.adjoint());
}

QuantumState QuantumState::from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kTolHermitian) {
    throw precondition_error(
        "QuantumState: Bloch vector must lie in the unit ball");
  }
  return QuantumState(bloch_operator(1.0, r));
}

QuantumState QuantumState::maximally_mixed(Eigen::Index dim) {
  return QuantumState(identity(dim) / static_cast<double>(dim));
}

Complex expectation(const QuantumState& rho, const Matrix& x) {
  if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
    throw precondition_error("expectation: dimension mismatch");
  }
  return (rho.density() * x).trace();
}

double real_expectation(const QuantumState& rho, const Matrix& x) {
  const Complex v = expectation(rho, x);
  if (std::abs(v.imag()) > kTolHermitian) {
    throw std::runtime_error(
        "real_expectation: imaginary part exceeds tolerance");
  }
  return v.real();
}

}  // namespace murlab
