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

#include "murlab/error_measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace murlab {

namespace {

double mean_squared_change(const JointDistribution& joint) {
  double s = 0.0;
  for (const JointDistribution::Atom& a : joint.atoms()) {
    s += (a.x - a.y) * (a.x - a.y) * a.weight;
  }
  return s;
}

// Shared bilinear form sum_kl (t_k - s_l)^2 Re tr(rho T_k S_l). Although the
// summands can be negative for non-commuting pairs, the total never drops
// below zero (the approximator's second moment dominates the square of its
// first), so an undershoot beyond kTolPositive is a numerical inconsistency
// rather than a property of the inputs.
double bilinear_sq(const QuantumState& rho, const DiscreteObservable& target,
                   const DiscreteObservable& approx, const char* what) {
  if (target.dim() != rho.dim() || approx.dim() != rho.dim()) {
    throw precondition_error(std::string(what) + ": dimension mismatch");
  }
  if (!target.is_sharp()) {
    throw precondition_error(std::string(what) +
                             ": target observable must be sharp");
  }
  double s = 0.0;
  for (const Outcome& t : target.outcomes()) {
    const Matrix weighted = rho.density() * t.effect;
    for (const Outcome& a : approx.outcomes()) {
      const double gap = t.value - a.value;
      s += gap * gap * (weighted * a.effect).trace().real();
    }
  }
  if (s < -kTolPositive) {
    throw std::runtime_error(std::string(what) +
                             ": negative mean squared deviation");
  }
  return std::max(s, 0.0);
}

}  // namespace

JointDistribution::JointDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw precondition_error("JointDistribution: no atoms");
  }
  double sum = 0.0;
  for (Atom& a : atoms_) {
    if (!std::isfinite(a.x) || !std::isfinite(a.y)) {
      throw precondition_error("JointDistribution: value is not finite");
    }
    if (a.weight < -kTolPositive) {
      throw precondition_error("JointDistribution: negative weight");
    }
    a.weight = std::max(a.weight, 0.0);
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > kTolHermitian) {
    throw precondition_error("JointDistribution: weights must sum to 1");
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<Atom> merged;
  merged.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    if (!merged.empty() && std::abs(a.x - merged.back().x) <= kValueMergeTol &&
        std::abs(a.y - merged.back().y) <= kValueMergeTol) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  atoms_ = std::move(merged);
}

DiscreteDistribution JointDistribution::marginal_x() const {
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(atoms_.size());
  for (const Atom& a : atoms_) atoms.push_back({a.x, a.weight});
  return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution JointDistribution::marginal_y() const {
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(atoms_.size());
  for (const Atom& a : atoms_) atoms.push_back({a.y, a.weight});
  return DiscreteDistribution(std::move(atoms));
}

QuasiDistribution::QuasiDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw precondition_error("QuasiDistribution: no atoms");
  }
  double sum = 0.0;
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.value) || !std::isfinite(a.weight)) {
      throw precondition_error("QuasiDistribution: entry is not finite");
    }
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > kTolHermitian) {
    throw precondition_error("QuasiDistribution: weights must sum to 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  std::vector<Atom> merged;
  merged.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    if (!merged.empty() &&
        std::abs(a.value - merged.back().value) <= kValueMergeTol) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  atoms_ = std::move(merged);
}

bool QuasiDistribution::has_negative(double tol) const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [tol](const Atom& a) { return a.weight < -tol; });
}

double rms_of(const JointDistribution& joint) {
  return std::sqrt(mean_squared_change(joint));
}

double epsilon_sq_general(const QuantumState& rho, const DiscreteObservable& a,
                          const DiscreteObservable& c) {
  return bilinear_sq(rho, a, c, "epsilon_general");
}

double epsilon_general(const QuantumState& rho, const DiscreteObservable& a,
                       const DiscreteObservable& c) {
  return std::sqrt(epsilon_sq_general(rho, a, c));
}

double eta_sq_general(const QuantumState& rho, const DiscreteObservable& b,
                      const DiscreteObservable& d) {
  return bilinear_sq(rho, b, d, "eta_general");
}

double eta_general(const QuantumState& rho, const DiscreteObservable& b,
                   const DiscreteObservable& d) {
  return std::sqrt(eta_sq_general(rho, b, d));
}

DirectTestResult epsilon_direct(const QuantumState& rho,
                                const DiscreteObservable& a,
                                const DiscreteObservable& c) {
  if (a.dim() != rho.dim() || c.dim() != rho.dim()) {
    throw precondition_error("epsilon_direct: dimension mismatch");
  }
  if (!a.is_sharp()) {
    throw precondition_error("epsilon_direct: target observable must be sharp");
  }
  if (!commute_check(a, c)) {
    throw precondition_error(
        "epsilon_direct: target and approximator do not commute, so the "
        "value-comparison protocol does not apply");
  }
  std::vector<JointDistribution::Atom> atoms;
  atoms.reserve(a.size() * c.size());
  for (const Outcome& ka : a.outcomes()) {
    const Matrix conditioned = ka.effect * rho.density() * ka.effect;
    for (const Outcome& lc : c.outcomes()) {
      atoms.push_back(
          {ka.value, lc.value, (conditioned * lc.effect).trace().real()});
    }
  }
  DirectTestResult result{0.0, 0.0, JointDistribution(std::move(atoms))};
  result.squared = mean_squared_change(result.joint);
  result.value = std::sqrt(result.squared);
  return result;
}

DirectTestResult eta_direct(const QuantumState& rho,
                            const DiscreteObservable& b,
                            const Instrument& inst) {
  if (b.dim() != rho.dim() || inst.dim() != rho.dim()) {
    throw precondition_error("eta_direct: dimension mismatch");
  }
  if (!b.is_sharp()) {
    throw precondition_error("eta_direct: target observable must be sharp");
  }
  const DiscreteObservable distorted = distorted_observable(inst, b);
  if (!commute_check(b, distorted)) {
    throw precondition_error(
        "eta_direct: the instrument distorts the target into a "
        "non-commuting observable, so the sandwich protocol does not apply");
  }
  std::vector<JointDistribution::Atom> atoms;
  atoms.reserve(b.size() * b.size());
  for (const Outcome& kb : b.outcomes()) {
    const Matrix through =
        inst.apply_total(kb.effect * rho.density() * kb.effect);
    for (const Outcome& lb : b.outcomes()) {
      atoms.push_back(
          {kb.value, lb.value, (through * lb.effect).trace().real()});
    }
  }
  DirectTestResult result{0.0, 0.0, JointDistribution(std::move(atoms))};
  result.squared = mean_squared_change(result.joint);
  result.value = std::sqrt(result.squared);
  return result;
}

}  // namespace murlab
