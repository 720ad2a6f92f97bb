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

#include "murlab/lund_wiseman.hpp"

#include <cmath>
#include <utility>

namespace murlab {

namespace {

// Factor order is (probe, object, apparatus); factor 0 owns the most
// significant bit of a basis label.
constexpr int kProbe = 0;
constexpr int kObject = 1;
constexpr int kApparatus = 2;

Matrix hadamard() {
  Matrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

// Single-qubit gate on one factor of the three-qubit register.
Matrix embed(const Matrix& gate, int factor) {
  Matrix out = factor == 0 ? gate : identity(2);
  for (int f = 1; f < 3; ++f) {
    out = tensor(out, f == factor ? gate : identity(2));
  }
  return out;
}

// CNOT between two factors of the three-qubit register, as the basis
// permutation |...> -> |... target ^ control ...>.
Matrix cnot(int control, int target) {
  Matrix out = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    const int control_bit = (i >> (2 - control)) & 1;
    const int j = control_bit ? i ^ (1 << (2 - target)) : i;
    out(j, i) = 1.0;
  }
  return out;
}

// The full pipeline, including the final object-basis rotation that turns
// the X readout into a computational-basis readout.
Matrix circuit_unitary() {
  const Matrix h_obj = embed(hadamard(), kObject);
  return h_obj * cnot(kObject, kApparatus) * h_obj * cnot(kObject, kProbe) *
         h_obj;
}

}  // namespace

void CircuitConfig::validate() const {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kTolHermitian) {
    throw precondition_error(
        "CircuitConfig: object amplitudes must be normalized");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0 + kTolHermitian)) {
    throw precondition_error("CircuitConfig: gamma must lie in [0, 1]");
  }
  if (!std::isfinite(theta)) {
    throw precondition_error("CircuitConfig: theta must be finite");
  }
}

double CircuitConfig::gamma_prime() const {
  return std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
}

Ket CircuitConfig::object_ket() const {
  Ket psi(2);
  psi << alpha, beta;
  return psi;
}

QuantumState CircuitConfig::object_state() const {
  return QuantumState::from_ket(object_ket());
}

double CircuitConfig::mean_x() const {
  return 2.0 * (std::conj(alpha) * beta).real();
}

double CircuitConfig::mean_z() const { return std::norm(alpha) - std::norm(beta); }

OutcomeDistribution8::OutcomeDistribution8(std::array<double, 8> p) : p_(p) {
  double sum = 0.0;
  for (double& w : p_) {
    if (!std::isfinite(w)) {
      throw precondition_error("OutcomeDistribution8: entry is not finite");
    }
    if (w < -kTolPositive) {
      throw precondition_error("OutcomeDistribution8: negative probability");
    }
    w = std::max(w, 0.0);
    sum += w;
  }
  if (std::abs(sum - 1.0) > kTolHermitian) {
    throw precondition_error(
        "OutcomeDistribution8: probabilities must sum to 1");
  }
}

std::size_t OutcomeDistribution8::index(int k, int l, int n) {
  const auto bit = [](int outcome) -> std::size_t {
    if (outcome == 1) return 0;
    if (outcome == -1) return 1;
    throw precondition_error("OutcomeDistribution8: outcomes must be +1 or -1");
  };
  return 4 * bit(k) + 2 * bit(l) + bit(n);
}

double OutcomeDistribution8::probe_final(int k, int l) const {
  return probability(k, l, +1) + probability(k, l, -1);
}

JointDistribution OutcomeDistribution8::probe_final_joint() const {
  std::vector<JointDistribution::Atom> atoms;
  atoms.reserve(4);
  for (int k : {+1, -1}) {
    for (int l : {+1, -1}) {
      atoms.push_back({static_cast<double>(k), static_cast<double>(l),
                       probe_final(k, l)});
    }
  }
  return JointDistribution(std::move(atoms));
}

OutcomeDistribution8 simulate(const CircuitConfig& cfg) {
  cfg.validate();
  Ket probe(2), apparatus(2);
  probe << cfg.gamma, cfg.gamma_prime();
  apparatus << std::cos(cfg.theta), std::sin(cfg.theta);
  const Ket input = tensor(tensor(probe, cfg.object_ket()), apparatus);
  const Ket output = circuit_unitary() * input;

  std::array<double, 8> p{};
  for (int i = 0; i < 8; ++i) p[i] = std::norm(output(i));
  return OutcomeDistribution8(p);
}

Povm8 povm_8(const CircuitConfig& cfg) {
  cfg.validate();
  Ket probe(2), apparatus(2);
  probe << cfg.gamma, cfg.gamma_prime();
  apparatus << std::cos(cfg.theta), std::sin(cfg.theta);

  // Isometry from the object qubit into the register: column b prepares the
  // ancillas, injects the object basis state |b>, and runs the pipeline.
  Eigen::Matrix<Complex, 8, 2> isometry;
  const Matrix u = circuit_unitary();
  for (int b = 0; b < 2; ++b) {
    Ket basis = Ket::Zero(2);
    basis(b) = 1.0;
    isometry.col(b) = u * tensor(tensor(probe, basis), apparatus);
  }

  Povm8 povm;
  for (int i = 0; i < 8; ++i) {
    povm.effects[i] = isometry.row(i).adjoint() * isometry.row(i);
  }
  return povm;
}

CircuitMarginals marginals(const CircuitConfig& cfg) {
  const Povm8 povm = povm_8(cfg);
  const auto sum_over = [&povm](int fixed_k, int fixed_l, int fixed_n) {
    Matrix acc = Matrix::Zero(2, 2);
    for (int k : {+1, -1}) {
      if (fixed_k != 0 && k != fixed_k) continue;
      for (int l : {+1, -1}) {
        if (fixed_l != 0 && l != fixed_l) continue;
        for (int n : {+1, -1}) {
          if (fixed_n != 0 && n != fixed_n) continue;
          acc += povm.effect(k, l, n);
        }
      }
    }
    return acc;
  };

  const auto two_outcome = [&sum_over](int which) {
    std::vector<Outcome> outcomes;
    for (int v : {+1, -1}) {
      outcomes.push_back({static_cast<double>(v),
                          sum_over(which == 0 ? v : 0, which == 1 ? v : 0,
                                   which == 2 ? v : 0)});
    }
    return DiscreteObservable(std::move(outcomes));
  };

  CircuitMarginals m{two_outcome(0), two_outcome(1), two_outcome(2), {}};
  for (int k : {+1, -1}) {
    for (int l : {+1, -1}) {
      m.probe_final[2 * static_cast<std::size_t>(k < 0) +
                    static_cast<std::size_t>(l < 0)] = sum_over(k, l, 0);
    }
  }
  return m;
}

WeakValuedEta eta_weak(const CircuitConfig& cfg) {
  cfg.validate();
  const double w = cfg.coupling_strength();
  if (cfg.gamma * cfg.gamma <= 0.5 + 1e-9) {
    throw precondition_error(
        "eta_weak: the reconstruction divides by 2 gamma^2 - 1 and needs "
        "gamma^2 > 1/2");
  }

  // Operational (probe, final) probabilities from the joint marginal POVM.
  const CircuitMarginals m = marginals(cfg);
  const QuantumState rho = cfg.object_state();
  const auto operational = [&](int k, int l) {
    return real_expectation(rho, m.f(k, l));
  };
  for (int l : {+1, -1}) {
    if (operational(+1, l) + operational(-1, l) <= kTolHermitian) {
      throw precondition_error(
          "eta_weak: a final X outcome has probability 0, so the "
          "weak-valued conditionals are undefined");
    }
  }

  // Amplify the probe readout by 1/w to undo the finite coupling. The
  // reconstruction is exact here for every admissible w: the probe couples
  // before the apparatus acts and commutes with the final X readout.
  const auto weak_valued = [&](int initial, int final_x) {
    const double total = operational(+1, final_x) + operational(-1, final_x);
    const double gap =
        (operational(+1, final_x) - operational(-1, final_x)) / w;
    return 0.5 * (total + initial * gap);
  };

  const double down = weak_valued(+1, -1);  // delta X = -2
  const double up = weak_valued(-1, +1);    // delta X = +2
  const double flat = weak_valued(+1, +1) + weak_valued(-1, -1);

  WeakValuedEta out{0.0, 0.0,
                    QuasiDistribution({{-2.0, down}, {0.0, flat}, {+2.0, up}})};
  out.eta_squared = std::max(0.0, 4.0 * (down + up));
  out.eta = std::sqrt(out.eta_squared);
  return out;
}

StrongEta eta_strong(const CircuitConfig& cfg) {
  cfg.validate();
  if (std::abs(cfg.gamma - 1.0) > kTolHermitian) {
    throw precondition_error("eta_strong: the strong method requires gamma = 1");
  }
  const OutcomeDistribution8 dist = simulate(cfg);
  StrongEta out;
  out.eta_squared =
      4.0 * (dist.probe_final(+1, -1) + dist.probe_final(-1, +1));
  out.eta = std::sqrt(out.eta_squared);
  return out;
}

Instrument z_instrument(double theta) {
  if (!std::isfinite(theta)) {
    throw precondition_error("z_instrument: theta must be finite");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix plus = Matrix::Zero(2, 2);
  plus(0, 0) = c;
  plus(1, 1) = s;
  Matrix minus = Matrix::Zero(2, 2);
  minus(0, 0) = s;
  minus(1, 1) = c;
  return Instrument({InstrumentOutcome{+1.0, {std::move(plus)}},
                     InstrumentOutcome{-1.0, {std::move(minus)}}});
}

}  // namespace murlab
