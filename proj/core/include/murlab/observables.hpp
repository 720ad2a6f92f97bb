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

/// @file observables.hpp
/// Finite discrete observables (POVMs with real outcome values), classical
/// post-processing (smearing), and measurement instruments in Kraus form.
/// A sharp observable is the spectral measure of a Hermitian operator; an
/// unsharp one is any other effect decomposition. Instruments describe how
/// a measurement transforms the state, and the distorted observable is what
/// a sharp follow-up measurement becomes when performed after them.

#pragma once

#include <cstddef>
#include <vector>

#include "murlab/qcore.hpp"

namespace murlab {

/// One measurement outcome: a real value and the effect that represents it.
struct Outcome {
  double value = 0.0;
  Matrix effect;
};

/// A finite positive-operator-valued measure together with a real value per
/// outcome. Construction validates that every effect is positive
/// semidefinite (kTolPositive), that the effects sum to the identity
/// (kTolHermitian entrywise), and that all values are finite; outcomes are
/// stored sorted by value, and values closer than kValueMergeTol are merged
/// into a single outcome by summing their effects.
class DiscreteObservable {
 public:
  explicit DiscreteObservable(std::vector<Outcome> outcomes);

  Eigen::Index dim() const { return outcomes_.front().effect.rows(); }
  std::size_t size() const { return outcomes_.size(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const Outcome& outcome(std::size_t k) const { return outcomes_.at(k); }

  /// True when every effect is a projector within @p tol.
  bool is_sharp(double tol = kTolPositive) const;

 private:
  std::vector<Outcome> outcomes_;
};

/// Spectral measure of a Hermitian operator: eigenvalues become outcome
/// values and eigenprojectors become effects. Eigenvalues within
/// kValueMergeTol collapse into one degenerate outcome.
DiscreteObservable sharp_observable(const Matrix& h);

/// Convenience: the sharp two-outcome observable n.sigma for a unit Bloch
/// vector, with values +1 and -1.
DiscreteObservable sharp_qubit_observable(const BlochVector& axis);

/// Column-stochastic matrix: nonnegative entries, every column summing to 1
/// within kTolHermitian. Entry (l, m) is the probability of relabeling
/// outcome m as l.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Eigen::MatrixXd entries);
  static StochasticMatrix identity(Eigen::Index n);

  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  double operator()(Eigen::Index l, Eigen::Index m) const {
    return entries_(l, m);
  }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// Classical post-processing of @p b by @p lambda: effects
/// D_l = sum_m lambda(l, m) B_m. A square matrix inherits b's outcome
/// values; a non-square one changes the outcome count, so the caller must
/// supply the value list for the relabeled outcomes.
DiscreteObservable smear(const DiscreteObservable& b,
                         const StochasticMatrix& lambda);
DiscreteObservable smear(const DiscreteObservable& b,
                         const StochasticMatrix& lambda,
                         const std::vector<double>& values);

/// One instrument outcome: a real value and the Kraus operators of the
/// associated (completely positive) state transformation.
struct InstrumentOutcome {
  double value = 0.0;
  std::vector<Matrix> kraus;
};

/// A discrete measurement instrument: outcome-indexed completely positive
/// maps I_n whose sum is trace-preserving (sum_n,i K^dag K = identity within
/// kTolHermitian, enforced at construction).
class Instrument {
 public:
  explicit Instrument(std::vector<InstrumentOutcome> outcomes);

  /// The trivial instrument: one outcome (value 0) that leaves the state
  /// untouched.
  static Instrument identity(Eigen::Index dim);

  Eigen::Index dim() const;
  std::size_t size() const { return outcomes_.size(); }
  const std::vector<InstrumentOutcome>& outcomes() const { return outcomes_; }
  const InstrumentOutcome& outcome(std::size_t n) const {
    return outcomes_.at(n);
  }

  /// Unnormalized conditional state I_n(rho) = sum_i K_i rho K_i^dag.
  Matrix apply(std::size_t n, const Matrix& rho) const;

  /// The total channel sum_n I_n(rho).
  Matrix apply_total(const Matrix& rho) const;

  /// Heisenberg dual I_n^*(e) = sum_i K_i^dag e K_i.
  Matrix apply_dual(std::size_t n, const Matrix& e) const;

  /// The observable the instrument implements: effects I_n^*(identity) with
  /// the instrument's outcome values.
  DiscreteObservable measured_observable() const;

 private:
  std::vector<InstrumentOutcome> outcomes_;
};

/// Projective (Lueders) instrument of a sharp observable:
/// I_k(rho) = A_k rho A_k. Requires every effect of @p a to be a projector.
Instrument lueders_instrument(const DiscreteObservable& a);

/// The observable actually measured when a sharp follow-up of @p b is
/// performed after @p inst and the instrument's outcome is discarded:
/// effects D_l = sum_n I_n^*(B_l), carrying b's outcome values.
DiscreteObservable distorted_observable(const Instrument& inst,
                                        const DiscreteObservable& b);

/// True iff every effect of @p x commutes with every effect of @p y within
/// @p tol (entrywise on the commutator).
bool commute_check(const DiscreteObservable& x, const DiscreteObservable& y,
                   double tol = kTolHermitian);

}  // namespace murlab
