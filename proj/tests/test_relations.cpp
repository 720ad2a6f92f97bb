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

#include "murlab/relations.hpp"
#include "support/random_gen.hpp"
#include "support/reference_forms.hpp"

using murlab::BlochVector;
using murlab::DiscreteObservable;
using murlab::ErrorPair;
using murlab::Instrument;
using murlab::QuantumState;

TEST_SUITE("relations") {

TEST_CASE("closed forms frozen values") {
  const BlochVector z(0, 0, 1);
  const BlochVector x(1, 0, 0);

  CHECK(murlab::delta_sq_closed(z, x) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(murlab::epsilon_sq_closed(z, x) == doctest::Approx(2.0));

  CHECK(murlab::delta_sq_closed(z, 0.8 * z) == doctest::Approx(0.4));
  CHECK(murlab::epsilon_sq_closed(z, 0.8 * z) == doctest::Approx(0.4));

  CHECK(murlab::delta_sq_closed(z, z) == doctest::Approx(0.0));
  CHECK(murlab::epsilon_sq_closed(z, z) == doctest::Approx(0.0));

  CHECK_THROWS_AS((void)murlab::delta_sq_closed(0.9 * z, x),
                  murlab::precondition_error);
  CHECK_THROWS_AS((void)murlab::epsilon_sq_closed(z, 1.01 * x),
                  murlab::precondition_error);
}

TEST_CASE("closed forms agree with the transcribed expressions") {
  murlab::Pcg32 rng(2026, 61);
  for (int trial = 0; trial < 100; ++trial) {
    const BlochVector a = testgen::unit_bloch(rng);
    const BlochVector c = testgen::ball_bloch(rng);
    CHECK(murlab::delta_sq_closed(a, c) ==
          doctest::Approx(reference::delta_sq(a, c)).epsilon(1e-13));
    CHECK(murlab::epsilon_sq_closed(a, c) ==
          doctest::Approx(reference::epsilon_sq(a, c)).epsilon(1e-13));
    // eps^2 = 2 (1 - a.c) is the same quantity rearranged.
    CHECK(murlab::epsilon_sq_closed(a, c) ==
          doctest::Approx(2.0 * (1.0 - a.dot(c))).epsilon(1e-12));
  }
}

TEST_CASE("misaligned sharp approximators give eps equal to half delta sq") {
  murlab::Pcg32 rng(2026, 62);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochVector a = testgen::unit_bloch(rng);
    const BlochVector c = testgen::unit_bloch(rng);
    const double eps = std::sqrt(murlab::epsilon_sq_closed(a, c));
    const double half_delta_sq = 0.5 * murlab::delta_sq_closed(a, c);
    CHECK(eps == doctest::Approx(half_delta_sq).epsilon(1e-12));
  }
}

TEST_CASE("aligned smeared approximators give eps equal to delta") {
  murlab::Pcg32 rng(2026, 63);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochVector a = testgen::unit_bloch(rng);
    const double lambda = rng.uniform01();
    const double eps_sq = murlab::epsilon_sq_closed(a, lambda * a);
    const double delta_sq = murlab::delta_sq_closed(a, lambda * a);
    CHECK(eps_sq == doctest::Approx(delta_sq).epsilon(1e-12));
  }
}

TEST_CASE("state independence of the bilinear error for unbiased schemes") {
  murlab::Pcg32 rng(2026, 64);
  for (int trial = 0; trial < 10; ++trial) {
    const BlochVector a_axis = testgen::unit_bloch(rng);
    const BlochVector c_axis = testgen::ball_bloch(rng);
    const DiscreteObservable a = murlab::sharp_qubit_observable(a_axis);
    std::vector<murlab::Outcome> outcomes(2);
    outcomes[0] = {+1.0, murlab::bloch_to_effect(c_axis, +1)};
    outcomes[1] = {-1.0, murlab::bloch_to_effect(c_axis, -1)};
    const DiscreteObservable c{outcomes};

    const double closed = murlab::epsilon_sq_closed(a_axis, c_axis);
    double lo = closed;
    double hi = closed;
    for (int s = 0; s < 25; ++s) {
      const QuantumState rho = testgen::random_state2(rng);
      const double value = murlab::epsilon_sq_general(rho, a, c);
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    CHECK(hi - lo < 1e-10);
  }
}

TEST_CASE("disc bound") {
  const double d = 1.0 - 1.0 / std::sqrt(2.0);
  const murlab::BoundCheck tight = murlab::branciard_disc({d, d});
  CHECK(tight.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tight.satisfied);

  const murlab::BoundCheck inside = murlab::branciard_disc({1.0, 1.0});
  CHECK(inside.lhs == doctest::Approx(0.0));
  CHECK(inside.satisfied);

  const murlab::BoundCheck outside = murlab::branciard_disc({0.1, 0.1});
  CHECK(outside.lhs == doctest::Approx(1.62).epsilon(1e-12));
  CHECK_FALSE(outside.satisfied);
}

TEST_CASE("additive bound") {
  const double d = 1.0 - 1.0 / std::sqrt(2.0);
  const murlab::BoundCheck equality = murlab::additive_bound({d, d});
  CHECK(equality.lhs == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(equality.satisfied);

  CHECK(murlab::additive_bound({0.5, 0.5}).satisfied);
  CHECK_FALSE(murlab::additive_bound({0.1, 0.1}).satisfied);
}

TEST_CASE("identity instrument sits at the no-measurement corner") {
  std::vector<murlab::JointScheme> schemes;
  schemes.push_back({"identity", Instrument::identity(2)});
  const std::vector<ErrorPair> pairs = murlab::scan_joint_schemes(schemes);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].d_z == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pairs[0].d_x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(murlab::branciard_disc(pairs[0]).satisfied);
}

TEST_CASE("projective z sits at the full-disturbance corner") {
  std::vector<murlab::JointScheme> schemes;
  schemes.push_back({"projective z", murlab::z_instrument(0.0)});
  const std::vector<ErrorPair> pairs = murlab::scan_joint_schemes(schemes);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].d_z == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(pairs[0].d_x == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("circuit family traverses the disc boundary") {
  std::vector<double> thetas;
  for (int k = 0; k <= 16; ++k) thetas.push_back(k * M_PI / 64.0);
  const std::vector<murlab::JointScheme> schemes =
      murlab::circuit_scheme_family(thetas);
  REQUIRE(schemes.size() == thetas.size());
  const std::vector<ErrorPair> pairs = murlab::scan_joint_schemes(schemes);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double theta = thetas[i];
    CHECK(pairs[i].d_z ==
          doctest::Approx(1.0 - std::cos(2.0 * theta)).epsilon(1e-12));
    CHECK(pairs[i].d_x ==
          doctest::Approx(1.0 - std::sin(2.0 * theta)).epsilon(1e-12));

    const murlab::BoundCheck disc = murlab::branciard_disc(pairs[i]);
    CHECK(disc.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(disc.satisfied);
    CHECK(murlab::additive_bound(pairs[i]).satisfied);
  }

  // Equality of the additive bound at theta = pi/8.
  const murlab::BoundCheck mid = murlab::additive_bound(pairs[8]);
  CHECK(mid.lhs == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("scheme names carry the angle") {
  const std::vector<murlab::JointScheme> schemes =
      murlab::circuit_scheme_family({0.0, M_PI / 8.0});
  CHECK(schemes[0].name.find("theta") != std::string::npos);
  CHECK(schemes[1].name.find("0.39269908") != std::string::npos);
}

TEST_CASE("biased instruments are rejected by the scan") {
  // K_+ = diag(1, 1/sqrt 2), K_- = diag(0, 1/sqrt 2) is a valid instrument
  // whose measured observable has first moment diag(1, 0): biased.
  murlab::Matrix k_plus = murlab::Matrix::Zero(2, 2);
  k_plus(0, 0) = 1.0;
  k_plus(1, 1) = 1.0 / std::sqrt(2.0);
  murlab::Matrix k_minus = murlab::Matrix::Zero(2, 2);
  k_minus(1, 1) = 1.0 / std::sqrt(2.0);

  std::vector<murlab::InstrumentOutcome> outcomes(2);
  outcomes[0] = {+1.0, {k_plus}};
  outcomes[1] = {-1.0, {k_minus}};
  std::vector<murlab::JointScheme> schemes;
  schemes.push_back({"biased", Instrument(outcomes)});
  CHECK_THROWS_AS((void)murlab::scan_joint_schemes(schemes),
                  murlab::precondition_error);
}

}  // TEST_SUITE
