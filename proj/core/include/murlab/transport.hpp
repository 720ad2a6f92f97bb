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

/// @file transport.hpp
/// Order-2 transport distance between finite value distributions and the
/// induced distance between qubit observables. The distance D2(p, q) is the
/// smallest root-mean-square value change over all couplings of p and q; it
/// is computed exactly with a transportation simplex. The observable
/// distance takes the worst case over states, which is attained on pure
/// states, so a Bloch-sphere search suffices.

#pragma once

#include <vector>

#include "murlab/observables.hpp"

namespace murlab {

/// A finite probability distribution over real values. Atoms are sorted by
/// value and values closer than kValueMergeTol are merged; weights must be
/// nonnegative (within kTolPositive, then clamped) and sum to 1 within
/// kTolHermitian.
class DiscreteDistribution {
 public:
  struct Atom {
    double value = 0.0;
    double weight = 0.0;
  };

  explicit DiscreteDistribution(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(std::size_t i) const { return atoms_.at(i); }

  double mean() const;
  double variance() const;

 private:
  std::vector<Atom> atoms_;
};

/// An optimal coupling: flow(i, j) mass moves from row_values[i] to
/// col_values[j]; row and column sums reproduce the two marginals.
struct TransportPlan {
  std::vector<double> row_values;
  std::vector<double> col_values;
  Eigen::MatrixXd flow;
};

struct TransportResult {
  double distance = 0.0;  ///< D2(p, q)
  double squared = 0.0;   ///< D2(p, q)^2, the minimal expected squared change
  TransportPlan plan;
};

/// Exact order-2 transport distance between two finite distributions
/// (transportation simplex with Vogel initialization).
TransportResult wasserstein2(const DiscreteDistribution& p,
                             const DiscreteDistribution& q);

/// Outcome distribution of an observable in a state: weight_k = tr(rho E_k).
DiscreteDistribution distribution_of(const DiscreteObservable& obs,
                                     const QuantumState& rho);

struct Delta2Result {
  double distance = 0.0;          ///< Delta2(a, c)
  double squared = 0.0;           ///< Delta2(a, c)^2
  BlochVector maximizer = BlochVector::Zero();  ///< worst-case pure state
};

/// Distance between two qubit observables: the supremum over states of
/// D2 between their outcome distributions. The supremum is attained on pure
/// states (the squared distance is convex in the state), so the search runs
/// over the Bloch sphere: a 2048-point Fibonacci grid followed by
/// Nelder-Mead refinement to tolerance 1e-7.
Delta2Result delta2_observables(const DiscreteObservable& a,
                                const DiscreteObservable& c);

}  // namespace murlab
