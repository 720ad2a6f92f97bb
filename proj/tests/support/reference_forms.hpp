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

/// @file reference_forms.hpp
/// Frozen closed-form expressions for the three-qubit circuit and the qubit
/// error measures, transcribed term by term from the published derivation
/// and kept deliberately independent of the production code paths. Tests
/// compare the simulator, the POVM construction and the estimators against
/// these forms.

#pragma once

#include <array>

#include "murlab/qcore.hpp"

namespace reference {

using murlab::BlochVector;
using murlab::Complex;
using murlab::Matrix;

/// 8 P(Z_p = k, X_f = l, Z_m = n) for the object state alpha|0> + beta|1>,
/// probe amplitude gamma and apparatus angle theta; one transcribed
/// expression per (k, l, n) branch. Returns the probability (already /8).
double joint_probability(int k, int l, int n, double gamma, double theta,
                         Complex alpha, Complex beta);

/// The 2x2 effect E_kln of the circuit POVM, one transcribed branch per
/// outcome (already /8).
Matrix povm_effect(int k, int l, int n, double gamma, double theta);

/// Marginal effects: P_k (probe), D_l (final X), C_n (apparatus) and the
/// probe/final joint F_kl.
Matrix probe_effect(int k, double gamma);
Matrix final_effect(int l, double theta);
Matrix apparatus_effect(int n, double gamma, double theta);
Matrix probe_final_effect(int k, int l, double gamma, double theta);

/// Operational joint probability P(Z_p = k, X_f = l) for object mean <X>.
double operational_joint(int k, int l, double gamma, double theta,
                         double mean_x);

/// Weak-valued P_WV(delta X = sign * 2): the probe-amplified reconstruction
/// from the operational probabilities, and its evaluated closed form
/// (1/2)(1 - sin 2 theta) (1/2)(1 -+ <X>).
double weak_valued_reconstructed(int sign, double gamma, double theta,
                                 double mean_x);
double weak_valued_closed(int sign, double theta, double mean_x);

/// eta(X)^2 = 2 (1 - sin 2 theta) = 2 (cos theta - sin theta)^2.
double eta_sq_weak(double theta);

/// 4 P(+,-) + 4 P(-,+) = 2 - 2 sin(2 theta) (2 gamma^2 - 1); equals
/// eta(X)^2 at gamma = 1.
double eta_sq_strong_raw(double gamma, double theta);

/// Qubit closed forms for sharp target axis a and unbiased approximator
/// axis c: Delta^2 = 2 |a - c| and eps^2 = 1 - |c|^2 + (1/4) Delta^4.
double delta_sq(const BlochVector& a, const BlochVector& c);
double epsilon_sq(const BlochVector& a, const BlochVector& c);

}  // namespace reference
