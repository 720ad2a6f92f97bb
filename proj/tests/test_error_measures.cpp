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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "murlab/error_measures.hpp"
#include "murlab/lund_wiseman.hpp"
#include "support/random_gen.hpp"
#include "support/reference_forms.hpp"

using murlab::BlochVector;
using murlab::DiscreteObservable;
using murlab::Instrument;
using murlab::JointDistribution;
using murlab::QuantumState;
using murlab::QuasiDistribution;
using murlab::StochasticMatrix;

namespace {

DiscreteObservable sharp_axis(double x, double y, double z) {
  return murlab::sharp_qubit_observable(BlochVector(x, y, z));
}

/// The worked smearing example used throughout this suite: Z relabeled with
/// kernel [[0.9, 0.2], [0.1, 0.8]] over the (sorted) outcomes (-1, +1).
DiscreteObservable smeared_z() {
  Eigen::MatrixXd kernel(2, 2);
  kernel << 0.9, 0.2, 0.1, 0.8;
  return murlab::smear(sharp_axis(0, 0, 1), StochasticMatrix(kernel));
}

}  // namespace

TEST_SUITE("error_measures") {

TEST_CASE("joint distribution marginals") {
  const JointDistribution joint({{-1.0, -1.0, 0.1},
                                 {-1.0, +1.0, 0.2},
                                 {+1.0, -1.0, 0.3},
                                 {+1.0, +1.0, 0.4}});
  const murlab::DiscreteDistribution mx = joint.marginal_x();
  REQUIRE(mx.size() == 2);
  CHECK(mx.atom(0).weight == doctest::Approx(0.3));
  CHECK(mx.atom(1).weight == doctest::Approx(0.7));
  const murlab::DiscreteDistribution my = joint.marginal_y();
  CHECK(my.atom(0).weight == doctest::Approx(0.4));

  // Coinciding pairs merge; weights must reach 1.
  const JointDistribution merged({{0.0, 0.0, 0.5}, {0.0, 0.0, 0.5}});
  CHECK(merged.size() == 1);
  CHECK_THROWS_AS(JointDistribution({{0.0, 0.0, 0.5}}),
                  murlab::precondition_error);
  CHECK_THROWS_AS(JointDistribution({{0.0, 0.0, 1.5}, {1.0, 0.0, -0.5}}),
                  murlab::precondition_error);
}

TEST_CASE("quasi distribution admits negative weights") {
  const QuasiDistribution quasi({{-2.0, -0.25}, {0.0, 0.75}, {+2.0, 0.5}});
  CHECK(quasi.has_negative());
  const QuasiDistribution proper({{-2.0, 0.25}, {+2.0, 0.75}});
  CHECK_FALSE(proper.has_negative());
  CHECK_THROWS_AS(QuasiDistribution({{0.0, 0.5}, {1.0, 0.4}}),
                  murlab::precondition_error);
}

TEST_CASE("rms of a joint distribution") {
  const JointDistribution joint({{-1.0, +1.0, 0.5}, {+1.0, +1.0, 0.5}});
  // Mean squared change: 0.5 * 4 + 0.5 * 0 = 2.
  CHECK(murlab::rms_of(joint) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("epsilon general frozen smearing example") {
  const QuantumState rho =
      QuantumState::from_bloch(BlochVector(0.6, 0.0, 0.8));
  const double eps_sq =
      murlab::epsilon_sq_general(rho, sharp_axis(0, 0, 1), smeared_z());
  CHECK(eps_sq == doctest::Approx(0.76).epsilon(1e-13));
  CHECK(murlab::epsilon_general(rho, sharp_axis(0, 0, 1), smeared_z()) ==
        doctest::Approx(std::sqrt(0.76)).epsilon(1e-13));
}

TEST_CASE("epsilon vanishes when the approximator is the target") {
  murlab::Pcg32 rng(2026, 41);
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteObservable a = testgen::random_sharp_qubit(rng);
    const QuantumState rho = testgen::random_state2(rng);
    CHECK(murlab::epsilon_sq_general(rho, a, a) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("epsilon direct reproduces the bilinear value when commuting") {
  const QuantumState rho =
      QuantumState::from_bloch(BlochVector(0.6, 0.0, 0.8));
  const DiscreteObservable a = sharp_axis(0, 0, 1);
  const DiscreteObservable c = smeared_z();

  const murlab::DirectTestResult direct = murlab::epsilon_direct(rho, a, c);
  CHECK(direct.squared == doctest::Approx(0.76).epsilon(1e-13));
  CHECK(direct.value * direct.value ==
        doctest::Approx(direct.squared).epsilon(1e-13));

  // Frozen joint table P(k, l) = tr(A_k rho A_k C_l).
  double p_pp = 0.0;
  double p_pm = 0.0;
  for (const auto& atom : direct.joint.atoms()) {
    if (atom.x > 0 && atom.y > 0) p_pp = atom.weight;
    if (atom.x > 0 && atom.y < 0) p_pm = atom.weight;
  }
  CHECK(p_pp == doctest::Approx(0.72).epsilon(1e-13));
  CHECK(p_pm == doctest::Approx(0.18).epsilon(1e-13));

  // The first marginal is the undisturbed target distribution.
  const murlab::DiscreteDistribution ma = direct.joint.marginal_x();
  CHECK(ma.atom(1).weight == doctest::Approx(0.9).epsilon(1e-13));
}

TEST_CASE("epsilon direct requires a commuting pair") {
  const QuantumState rho = QuantumState::maximally_mixed(2);
  CHECK_THROWS_AS(
      (void)murlab::epsilon_direct(rho, sharp_axis(0, 0, 1),
                                   sharp_axis(1, 0, 0)),
      murlab::precondition_error);
}

TEST_CASE("epsilon direct requires a sharp target") {
  const QuantumState rho = QuantumState::maximally_mixed(2);
  CHECK_THROWS_AS(
      (void)murlab::epsilon_direct(rho, smeared_z(), sharp_axis(0, 0, 1)),
      murlab::precondition_error);
}

TEST_CASE("eta direct frozen value for the apparatus instrument") {
  // b = X distorted by the approximate-Z stage at theta = pi/6:
  // eta^2 = 2 (1 - sin(pi/3)), state-independently.
  const Instrument inst = murlab::z_instrument(M_PI / 6.0);
  const DiscreteObservable b = sharp_axis(1, 0, 0);
  const double expected = 2.0 * (1.0 - std::sqrt(3.0) / 2.0);

  murlab::Pcg32 rng(2026, 42);
  for (int trial = 0; trial < 10; ++trial) {
    const QuantumState rho = testgen::random_state2(rng);
    const murlab::DirectTestResult direct = murlab::eta_direct(rho, b, inst);
    CHECK(direct.squared == doctest::Approx(expected).epsilon(1e-12));
    CHECK(murlab::eta_sq_general(
              rho, b, murlab::distorted_observable(inst, b)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("eta direct rejects non commuting distortions") {
  // The distorted effect axis of n = (1, 0, 1)/sqrt(2) under the z stage
  // tilts towards the equator, so it no longer commutes with sharp n.
  const Instrument inst = murlab::z_instrument(M_PI / 6.0);
  const DiscreteObservable diag =
      sharp_axis(1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0));
  const QuantumState rho = QuantumState::maximally_mixed(2);
  CHECK_THROWS_AS((void)murlab::eta_direct(rho, diag, inst),
                  murlab::precondition_error);
}

TEST_CASE("direct equals general over random commuting smearings") {
  murlab::Pcg32 rng(2026, 43);
  for (int trial = 0; trial < 100; ++trial) {
    const DiscreteObservable a = testgen::random_sharp_qubit(rng);
    const StochasticMatrix lambda = testgen::random_stochastic(rng, 2, 2);
    const DiscreteObservable c = murlab::smear(a, lambda);
    const QuantumState rho = testgen::random_state2(rng);

    const double general = murlab::epsilon_sq_general(rho, a, c);
    const murlab::DirectTestResult direct = murlab::epsilon_direct(rho, a, c);
    CHECK(std::abs(direct.squared - general) < 1e-12);
  }
}

TEST_CASE("error dominates the transport distance on commuting instances") {
  murlab::Pcg32 rng(2026, 44);
  for (int trial = 0; trial < 50; ++trial) {
    const DiscreteObservable a = testgen::random_sharp_qubit(rng);
    const StochasticMatrix lambda = testgen::random_stochastic(rng, 2, 2);
    const DiscreteObservable c = murlab::smear(a, lambda);
    const QuantumState rho = testgen::random_state2(rng);

    const double eps = murlab::epsilon_general(rho, a, c);
    const double d2 = murlab::wasserstein2(murlab::distribution_of(a, rho),
                                           murlab::distribution_of(c, rho))
                          .distance;
    CHECK(eps >= d2 - 1e-10);
  }
}

TEST_CASE("formal bilinear value works for non commuting pairs") {
  // epsilon_general stays defined (formal) off the commutative domain:
  // for a = Z, c = X at the maximally mixed state the cross terms carry no
  // weight asymmetry and eps^2 = <A^2> + <C^2> = 2.
  const QuantumState rho = QuantumState::maximally_mixed(2);
  const double eps_sq =
      murlab::epsilon_sq_general(rho, sharp_axis(0, 0, 1), sharp_axis(1, 0, 0));
  CHECK(eps_sq == doctest::Approx(2.0).epsilon(1e-13));
}

}  // TEST_SUITE
