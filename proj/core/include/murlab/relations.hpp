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

/// @file relations.hpp
/// Qubit closed forms and measurement-uncertainty trade-offs. For a sharp
/// qubit target with Bloch axis a and an unbiased two-outcome approximator
/// with effects (1/2)(1 +- c.sigma), the worst-case error has the
/// state-independent closed form eps^2 = 1 - |c|^2 + |a - c|^2 = 2(1 - a.c).
/// Rescaling by one half gives the coordinates d = eps^2 / 2 in which the
/// error/disturbance region for the Z/X pair is the unit disc around (1, 1).

#pragma once

#include <string>
#include <vector>

#include "murlab/lund_wiseman.hpp"
#include "murlab/observables.hpp"

namespace murlab {

/// Rescaled error/disturbance coordinates for the Z/X target pair:
/// d_z = eps(Z)^2 / 2 and d_x = eta(X)^2 / 2.
struct ErrorPair {
  double d_z = 0.0;
  double d_x = 0.0;
};

/// Delta2(A, C)^2 = 2 |a - c| for a sharp target (unit a) and an unbiased
/// approximator with Bloch vector c, |c| <= 1.
double delta_sq_closed(const BlochVector& a, const BlochVector& c);

/// eps(A)^2 = 1 - |c|^2 + |a - c|^2, the state-independent worst-case error
/// of the unbiased approximator c for the sharp target a.
double epsilon_sq_closed(const BlochVector& a, const BlochVector& c);

struct BoundCheck {
  double lhs = 0.0;
  bool satisfied = false;
};

/// Disc trade-off (d_z - 1)^2 + (d_x - 1)^2 <= 1, checked with slack 1e-9;
/// tight for the circuit family, which traverses the boundary arc.
BoundCheck branciard_disc(const ErrorPair& pair);

/// Additive trade-off d_z + d_x >= 2 - sqrt(2), checked with slack 1e-9;
/// equality at d_z = d_x = 1 - 1/sqrt(2).
BoundCheck additive_bound(const ErrorPair& pair);

/// A sequential joint-measurement scheme: a qubit instrument approximating
/// Z whose disturbance of X is then assessed.
struct JointScheme {
  std::string name;
  Instrument instrument;
};

/// Realized (d_z, d_x) of each scheme. The approximation axis c comes from
/// the first-moment operator of the observable the instrument measures, the
/// distortion axis d from that of the observable sharp X is distorted into;
/// both moment operators must be traceless (unbiased), and the coordinates
/// are d_z = |z_hat - c|, d_x = |x_hat - d|.
std::vector<ErrorPair> scan_joint_schemes(const std::vector<JointScheme>& schemes);

/// One scheme per angle: the approximate-Z instrument of the three-qubit
/// circuit evaluated at each theta.
std::vector<JointScheme> circuit_scheme_family(const std::vector<double>& thetas);

}  // namespace murlab
