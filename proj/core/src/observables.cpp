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

#include "murlab/observables.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace murlab {

namespace {

void check_effect_grid(const std::vector<Outcome>& outcomes,
                       const char* what) {
  if (outcomes.empty()) {
    throw precondition_error(std::string(what) + ": no outcomes");
  }
  const Eigen::Index dim = outcomes.front().effect.rows();
  if (dim != 2 && dim != 4 && dim != 8) {
    throw precondition_error(std::string(what) +
                             ": dimension must be 2, 4 or 8");
  }
  for (const Outcome& o : outcomes) {
    if (!std::isfinite(o.value)) {
      throw precondition_error(std::string(what) +
                               ": outcome value is not finite");
    }
    if (o.effect.rows() != dim || o.effect.cols() != dim) {
      throw precondition_error(std::string(what) +
                               ": effects differ in dimension");
    }
    if (!is_positive_semidefinite(o.effect)) {
      throw precondition_error(std::string(what) +
                               ": effect is not positive semidefinite");
    }
  }
}

}  // namespace

DiscreteObservable::DiscreteObservable(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  check_effect_grid(outcomes_, "DiscreteObservable");
  const Eigen::Index dim = outcomes_.front().effect.rows();

  Matrix sum = Matrix::Zero(dim, dim);
  for (const Outcome& o : outcomes_) sum += o.effect;
  if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() >
      kTolHermitian) {
    throw precondition_error(
        "DiscreteObservable: effects do not sum to the identity");
  }

  std::sort(outcomes_.begin(), outcomes_.end(),
            [](const Outcome& a, const Outcome& b) { return a.value < b.value; });

  // Merge outcomes whose values coincide up to kValueMergeTol.
  std::vector<Outcome> merged;
  merged.reserve(outcomes_.size());
  for (Outcome& o : outcomes_) {
    if (!merged.empty() &&
        std::abs(o.value - merged.back().value) <= kValueMergeTol) {
      merged.back().effect += o.effect;
    } else {
      merged.push_back(std::move(o));
    }
  }
  outcomes_ = std::move(merged);
}

bool DiscreteObservable::is_sharp(double tol) const {
  return std::all_of(
      outcomes_.begin(), outcomes_.end(),
      [tol](const Outcome& o) { return is_projector(o.effect, tol); });
}

DiscreteObservable sharp_observable(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw precondition_error("sharp_observable: matrix is not square");
  }
  if (!is_hermitian(h)) {
    throw precondition_error("sharp_observable: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();

  // Eigenvalues arrive sorted; group nearly equal ones into degenerate
  // outcomes so duplicated values cannot occur.
  std::vector<Outcome> outcomes;
  Eigen::Index start = 0;
  while (start < values.size()) {
    Eigen::Index stop = start + 1;
    while (stop < values.size() &&
           values(stop) - values(start) <= kValueMergeTol) {
      ++stop;
    }
    Matrix projector = Matrix::Zero(h.rows(), h.cols());
    for (Eigen::Index i = start; i < stop; ++i) {
      projector += vectors.col(i) * vectors.col(i).adjoint();
    }
    outcomes.push_back({values(start), std::move(projector)});
    start = stop;
  }
  return DiscreteObservable(std::move(outcomes));
}

DiscreteObservable sharp_qubit_observable(const BlochVector& axis) {
  if (std::abs(axis.norm() - 1.0) > kValueMergeTol) {
    throw precondition_error(
        "sharp_qubit_observable: axis must be a unit vector");
  }
  std::vector<Outcome> outcomes;
  outcomes.push_back({+1.0, bloch_to_effect(axis, +1)});
  outcomes.push_back({-1.0, bloch_to_effect(axis, -1)});
  return DiscreteObservable(std::move(outcomes));
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.cols() == 0) {
    throw precondition_error("StochasticMatrix: matrix is empty");
  }
  if ((entries_.array() < -kTolHermitian).any()) {
    throw precondition_error("StochasticMatrix: entries must be nonnegative");
  }
  for (Eigen::Index m = 0; m < entries_.cols(); ++m) {
    if (std::abs(entries_.col(m).sum() - 1.0) > kTolHermitian) {
      throw precondition_error(
          "StochasticMatrix: every column must sum to 1");
    }
  }
  entries_ = entries_.cwiseMax(0.0);
}

StochasticMatrix StochasticMatrix::identity(Eigen::Index n) {
  return StochasticMatrix(Eigen::MatrixXd::Identity(n, n));
}

namespace {

DiscreteObservable smear_impl(const DiscreteObservable& b,
                              const StochasticMatrix& lambda,
                              const std::vector<double>& values) {
  if (lambda.cols() != static_cast<Eigen::Index>(b.size())) {
    throw precondition_error(
        "smear: matrix columns must match the observable's outcome count");
  }
  if (values.size() != static_cast<std::size_t>(lambda.rows())) {
    throw precondition_error(
        "smear: one outcome value per matrix row is required");
  }
  std::vector<Outcome> outcomes;
  outcomes.reserve(values.size());
  for (Eigen::Index l = 0; l < lambda.rows(); ++l) {
    Matrix effect = Matrix::Zero(b.dim(), b.dim());
    for (Eigen::Index m = 0; m < lambda.cols(); ++m) {
      effect += lambda(l, m) * b.outcome(m).effect;
    }
    outcomes.push_back({values[l], std::move(effect)});
  }
  DiscreteObservable smeared(std::move(outcomes));

  // Post-processing a sharp observable can only produce effects that are
  // functions of its projectors, so the result must commute with it.
  if (b.is_sharp() && !commute_check(smeared, b)) {
    throw std::runtime_error("smear: output fails to commute with its source");
  }
  return smeared;
}

}  // namespace

DiscreteObservable smear(const DiscreteObservable& b,
                         const StochasticMatrix& lambda) {
  if (lambda.rows() != lambda.cols()) {
    throw precondition_error(
        "smear: a non-square matrix changes the outcome count; supply the "
        "new value list explicitly");
  }
  std::vector<double> values;
  values.reserve(b.size());
  for (const Outcome& o : b.outcomes()) values.push_back(o.value);
  return smear_impl(b, lambda, values);
}

DiscreteObservable smear(const DiscreteObservable& b,
                         const StochasticMatrix& lambda,
                         const std::vector<double>& values) {
  return smear_impl(b, lambda, values);
}

Instrument::Instrument(std::vector<InstrumentOutcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) {
    throw precondition_error("Instrument: no outcomes");
  }
  const Eigen::Index d = outcomes_.front().kraus.empty()
                             ? 0
                             : outcomes_.front().kraus.front().rows();
  if (d != 2 && d != 4 && d != 8) {
    throw precondition_error("Instrument: dimension must be 2, 4 or 8");
  }
  Matrix completeness = Matrix::Zero(d, d);
  for (const InstrumentOutcome& o : outcomes_) {
    if (!std::isfinite(o.value)) {
      throw precondition_error("Instrument: outcome value is not finite");
    }
    if (o.kraus.empty()) {
      throw precondition_error("Instrument: outcome has no Kraus operators");
    }
    for (const Matrix& k : o.kraus) {
      if (k.rows() != d || k.cols() != d) {
        throw precondition_error("Instrument: Kraus operators differ in size");
      }
      completeness += k.adjoint() * k;
    }
  }
  if ((completeness - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() >
      kTolHermitian) {
    throw precondition_error("Instrument: channel is not trace-preserving");
  }
}

Instrument Instrument::identity(Eigen::Index dim) {
  return Instrument({InstrumentOutcome{0.0, {murlab::identity(dim)}}});
}

Eigen::Index Instrument::dim() const {
  return outcomes_.front().kraus.front().rows();
}

Matrix Instrument::apply(std::size_t n, const Matrix& rho) const {
  const InstrumentOutcome& o = outcomes_.at(n);
  Matrix out = Matrix::Zero(dim(), dim());
  for (const Matrix& k : o.kraus) out += k * rho * k.adjoint();
  return out;
}

Matrix Instrument::apply_total(const Matrix& rho) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (std::size_t n = 0; n < outcomes_.size(); ++n) out += apply(n, rho);
  return out;
}

Matrix Instrument::apply_dual(std::size_t n, const Matrix& e) const {
  const InstrumentOutcome& o = outcomes_.at(n);
  Matrix out = Matrix::Zero(dim(), dim());
  for (const Matrix& k : o.kraus) out += k.adjoint() * e * k;
  return out;
}

DiscreteObservable Instrument::measured_observable() const {
  const Matrix one = Matrix::Identity(dim(), dim());
  std::vector<Outcome> outcomes;
  outcomes.reserve(outcomes_.size());
  for (std::size_t n = 0; n < outcomes_.size(); ++n) {
    outcomes.push_back({outcomes_[n].value, apply_dual(n, one)});
  }
  return DiscreteObservable(std::move(outcomes));
}

Instrument lueders_instrument(const DiscreteObservable& a) {
  std::vector<InstrumentOutcome> outcomes;
  outcomes.reserve(a.size());
  for (const Outcome& o : a.outcomes()) {
    if (!is_projector(o.effect, kTolPositive)) {
      throw precondition_error(
          "lueders_instrument: observable is not sharp");
    }
    outcomes.push_back({o.value, {o.effect}});
  }
  return Instrument(std::move(outcomes));
}

DiscreteObservable distorted_observable(const Instrument& inst,
                                        const DiscreteObservable& b) {
  if (inst.dim() != b.dim()) {
    throw precondition_error("distorted_observable: dimension mismatch");
  }
  std::vector<Outcome> outcomes;
  outcomes.reserve(b.size());
  for (const Outcome& o : b.outcomes()) {
    Matrix effect = Matrix::Zero(b.dim(), b.dim());
    for (std::size_t n = 0; n < inst.size(); ++n) {
      effect += inst.apply_dual(n, o.effect);
    }
    outcomes.push_back({o.value, std::move(effect)});
  }
  return DiscreteObservable(std::move(outcomes));
}

bool commute_check(const DiscreteObservable& x, const DiscreteObservable& y,
                   double tol) {
  if (x.dim() != y.dim()) return false;
  for (const Outcome& ox : x.outcomes()) {
    for (const Outcome& oy : y.outcomes()) {
      const Matrix commutator = ox.effect * oy.effect - oy.effect * ox.effect;
      if (commutator.cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

}  // namespace murlab
