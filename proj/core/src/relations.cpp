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

#include "murlab/relations.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace murlab {

namespace {

void check_closed_form_inputs(const BlochVector& a, const BlochVector& c,
                              const char* what) {
  if (std::abs(a.norm() - 1.0) > kValueMergeTol) {
    throw precondition_error(std::string(what) +
                             ": target axis must be a unit vector");
  }
  if (c.norm() > 1.0 + kTolHermitian) {
    throw precondition_error(std::string(what) +
                             ": approximator vector must lie in the unit ball");
  }
}

// Bloch vector of a realized marginal, read off its first-moment operator
// sum_l value_l * effect_l = t 1 + m . sigma. The distance coordinates
// presume an unbiased marginal (t = 0); a bias is rejected.
BlochVector moment_axis(const DiscreteObservable& obs, const char* what) {
  if (obs.dim() != 2) {
    throw precondition_error(std::string(what) +
                             ": only qubit schemes are supported");
  }
  Matrix moment = Matrix::Zero(2, 2);
  for (const Outcome& o : obs.outcomes()) moment += o.value * o.effect;
  // moment = t 1 + m.sigma, so tr(moment) = 2t and tr(moment sigma_i) = 2m_i.
  const EffectBloch bloch = effect_bloch(moment);
  if (std::abs(bloch.weight) > kValueMergeTol) {
    throw precondition_error(std::string(what) +
                             ": marginal is biased; the distance "
                             "coordinates do not apply");
  }
  return 0.5 * bloch.vector;
}

}  // namespace

double delta_sq_closed(const BlochVector& a, const BlochVector& c) {
  check_closed_form_inputs(a, c, "delta_sq_closed");
  return 2.0 * (a - c).norm();
}

double epsilon_sq_closed(const BlochVector& a, const BlochVector& c) {
  check_closed_form_inputs(a, c, "epsilon_sq_closed");
  return 1.0 - c.squaredNorm() + (a - c).squaredNorm();
}

BoundCheck branciard_disc(const ErrorPair& pair) {
  BoundCheck check;
  check.lhs = (pair.d_z - 1.0) * (pair.d_z - 1.0) +
              (pair.d_x - 1.0) * (pair.d_x - 1.0);
  check.satisfied = check.lhs <= 1.0 + 1e-9;
  return check;
}

BoundCheck additive_bound(const ErrorPair& pair) {
  BoundCheck check;
  check.lhs = pair.d_z + pair.d_x;
  check.satisfied = check.lhs >= 2.0 - std::sqrt(2.0) - 1e-9;
  return check;
}

std::vector<ErrorPair> scan_joint_schemes(
    const std::vector<JointScheme>& schemes) {
  std::vector<ErrorPair> pairs;
  pairs.reserve(schemes.size());
  const BlochVector z_axis(0, 0, 1);
  const BlochVector x_axis(1, 0, 0);
  for (const JointScheme& scheme : schemes) {
    if (scheme.instrument.dim() != 2) {
      throw precondition_error(
          "scan_joint_schemes: only qubit schemes are supported");
    }
    const BlochVector c = moment_axis(scheme.instrument.measured_observable(),
                                      "scan_joint_schemes");
    const BlochVector d = moment_axis(
        distorted_observable(scheme.instrument, sharp_qubit_observable(x_axis)),
        "scan_joint_schemes");
    pairs.push_back({(z_axis - c).norm(), (x_axis - d).norm()});
  }
  return pairs;
}

std::vector<JointScheme> circuit_scheme_family(
    const std::vector<double>& thetas) {
  std::vector<JointScheme> schemes;
  schemes.reserve(thetas.size());
  for (double theta : thetas) {
    char name[48];
    std::snprintf(name, sizeof(name), "circuit theta=%.9g", theta);
    schemes.push_back({name, z_instrument(theta)});
  }
  return schemes;
}

}  // namespace murlab
