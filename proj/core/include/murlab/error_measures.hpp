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

/// @file error_measures.hpp
/// State-dependent root-mean-square error and disturbance of approximate
/// measurements. The general bilinear expressions epsilon_general /
/// eta_general are defined for any pair of observables; when target and
/// approximator commute they equal the rms value deviation of a genuinely
/// measurable joint distribution, and the *_direct protocols produce that
/// joint distribution operationally: a projective (Lueders) measurement of
/// the target followed by the approximating measurement.

#pragma once

#include <vector>

#include "murlab/observables.hpp"
#include "murlab/transport.hpp"

namespace murlab {

/// A probability distribution over ordered value pairs (x, y). Weights must
/// be nonnegative within kTolPositive (then clamped) and sum to 1 within
/// kTolHermitian. Atoms are sorted lexicographically; coinciding pairs merge.
class JointDistribution {
 public:
  struct Atom {
    double x = 0.0;
    double y = 0.0;
    double weight = 0.0;
  };

  explicit JointDistribution(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  DiscreteDistribution marginal_x() const;
  DiscreteDistribution marginal_y() const;

 private:
  std::vector<Atom> atoms_;
};

/// A real-valued quasi-probability over values: weights may be negative but
/// must sum to 1 within kTolHermitian. Used for weak-valued statistics.
class QuasiDistribution {
 public:
  struct Atom {
    double value = 0.0;
    double weight = 0.0;
  };

  explicit QuasiDistribution(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  /// True when some weight drops below -tol.
  bool has_negative(double tol = kTolHermitian) const;

 private:
  std::vector<Atom> atoms_;
};

/// Root-mean-square deviation sqrt(sum (x - y)^2 w) of a joint value
/// distribution.
double rms_of(const JointDistribution& joint);

/// epsilon(A)^2 = sum_kl (a_k - c_l)^2 Re tr(rho A_k C_l) for a sharp target
/// a and approximator c. This is the formal bilinear expression: it is an
/// operationally meaningful error exactly when a and c commute. The value is
/// clamped at 0 if it undershoots by at most kTolPositive; a larger
/// undershoot throws (inconsistent inputs).
double epsilon_sq_general(const QuantumState& rho, const DiscreteObservable& a,
                          const DiscreteObservable& c);
double epsilon_general(const QuantumState& rho, const DiscreteObservable& a,
                       const DiscreteObservable& c);

/// eta(B)^2: same bilinear expression with the distorted observable in place
/// of the approximator.
double eta_sq_general(const QuantumState& rho, const DiscreteObservable& b,
                      const DiscreteObservable& d);
double eta_general(const QuantumState& rho, const DiscreteObservable& b,
                   const DiscreteObservable& d);

struct DirectTestResult {
  double value = 0.0;    ///< epsilon or eta
  double squared = 0.0;  ///< its square, the mean squared value change
  JointDistribution joint;
};

/// Value-comparison protocol for the error: Lueders measurement of the sharp
/// target a (outcome a_k), then the approximator c (outcome c_l);
/// P(k, l) = tr(A_k rho A_k C_l). Requires a and c to commute, which makes
/// the resulting rms deviation equal to epsilon_general.
DirectTestResult epsilon_direct(const QuantumState& rho,
                                const DiscreteObservable& a,
                                const DiscreteObservable& c);

/// Sandwich protocol for the disturbance: Lueders measurement of the sharp
/// b (outcome b_k), the instrument under test (readout discarded), then a
/// sharp control measurement of b (outcome b_l). Requires b to commute with
/// the observable b is distorted into, which makes the rms deviation equal
/// to eta_general.
DirectTestResult eta_direct(const QuantumState& rho,
                            const DiscreteObservable& b,
                            const Instrument& inst);

}  // namespace murlab
