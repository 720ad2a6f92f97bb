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

/// @file lund_wiseman.hpp
/// Three-qubit circuit that measures the disturbance an approximate Z
/// measurement inflicts on X. A probe qubit weakly measures X before the
/// apparatus acts (coupling strength 2 gamma^2 - 1), the apparatus qubit
/// performs the approximate Z measurement (quality cos 2 theta), and the
/// object's X is read out at the end. The (probe, final) statistics either
/// feed the weak-value reconstruction of the X change (any gamma > 1/sqrt 2)
/// or, at gamma = 1, give the change directly.

#pragma once

#include <array>

#include "murlab/error_measures.hpp"
#include "murlab/observables.hpp"

namespace murlab {

/// Circuit parameters. The object starts in alpha|0> + beta|1>, the probe in
/// gamma|0> + gamma'|1>, the apparatus in cos(theta)|0> + sin(theta)|1>.
struct CircuitConfig {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
  double gamma = 1.0;
  double theta = 0.0;

  /// Throws precondition_error unless |alpha|^2 + |beta|^2 = 1 within
  /// kTolHermitian, gamma lies in [0, 1] and theta is finite.
  void validate() const;

  double gamma_prime() const;  ///< sqrt(1 - gamma^2)
  /// Probe coupling strength w = 2 gamma^2 - 1 (1 = strong, 0 = decoupled).
  double coupling_strength() const { return 2.0 * gamma * gamma - 1.0; }

  Ket object_ket() const;
  QuantumState object_state() const;
  double mean_x() const;  ///< <X> of the object state
  double mean_z() const;  ///< <Z> of the object state
};

/// Joint probabilities P(Z_p = k, X_f = l, Z_m = n) of the three readouts,
/// each outcome +1 or -1 (+1 corresponds to |0> for the Z readouts and to
/// |+> for the X readout).
class OutcomeDistribution8 {
 public:
  explicit OutcomeDistribution8(std::array<double, 8> p);

  /// Storage order: index = 4*bit(k) + 2*bit(l) + bit(n) with bit(+1) = 0.
  static std::size_t index(int k, int l, int n);

  double probability(int k, int l, int n) const { return p_[index(k, l, n)]; }
  const std::array<double, 8>& raw() const { return p_; }

  /// Probe/final marginal P(Z_p = k, X_f = l), summed over the apparatus
  /// readout.
  double probe_final(int k, int l) const;

  /// The same marginal as a joint value distribution (x = probe, y = final).
  JointDistribution probe_final_joint() const;

 private:
  std::array<double, 8> p_;
};

/// Exact state-vector simulation of the circuit.
OutcomeDistribution8 simulate(const CircuitConfig& cfg);

/// The 8-outcome POVM the circuit realizes on the object qubit, obtained by
/// conjugating the readout projectors back through the gate pipeline.
/// tr(rho E_kln) reproduces simulate() for every object state.
struct Povm8 {
  std::array<Matrix, 8> effects;
  const Matrix& effect(int k, int l, int n) const {
    return effects[OutcomeDistribution8::index(k, l, n)];
  }
};
Povm8 povm_8(const CircuitConfig& cfg);

/// The two-outcome marginal POVMs of the three readouts plus the
/// probe/final joint effects F_kl = sum_n E_kln.
struct CircuitMarginals {
  DiscreteObservable probe;      ///< (1/2)(1 +- w X): the weak initial X
  DiscreteObservable final_x;    ///< (1/2)(1 +- sin(2 theta) X): distorted X
  DiscreteObservable apparatus;  ///< the approximate Z, as seen at the input
  std::array<Matrix, 4> probe_final;  ///< F_kl, index 2*bit(k) + bit(l)
  const Matrix& f(int k, int l) const {
    return probe_final[2 * static_cast<std::size_t>(k < 0) +
                       static_cast<std::size_t>(l < 0)];
  }
};
CircuitMarginals marginals(const CircuitConfig& cfg);

/// Weak-value reconstruction of the X-change statistics from the
/// operational (probe, final) probabilities tr(rho F_kl): amplify the probe
/// readout by 1/w and read off the quasi-probabilities of delta X in
/// {-2, 0, +2}. Exact for every admissible coupling; requires
/// gamma^2 > 1/2 + 1e-9 and every final X outcome to have nonzero
/// probability (both violations raise precondition_error).
struct WeakValuedEta {
  double eta = 0.0;
  double eta_squared = 0.0;
  QuasiDistribution quasi;  ///< reconstructed distribution of delta X
};
WeakValuedEta eta_weak(const CircuitConfig& cfg);

/// Strong direct method: at gamma = 1 the probe records X exactly, so the
/// disturbance is 4 P(probe and final X disagree). Requires gamma = 1.
struct StrongEta {
  double eta = 0.0;
  double eta_squared = 0.0;
};
StrongEta eta_strong(const CircuitConfig& cfg);

/// The apparatus stage in isolation: the approximate Z measurement as a
/// two-outcome instrument on the object, with Kraus operators
/// K_+ = diag(cos theta, sin theta) and K_- = diag(sin theta, cos theta).
/// theta = 0 is a projective Z measurement, theta = pi/4 ignores the object.
Instrument z_instrument(double theta);

}  // namespace murlab
