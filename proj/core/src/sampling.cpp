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

#include "murlab/sampling.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace murlab {

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u) {
  operator()();
  state_ += seed;
  operator()();
}

std::uint32_t Pcg32::operator()() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const auto xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double Pcg32::uniform01() {
  return (static_cast<double>(operator()()) + 0.5) * 0x1p-32;
}

ShotRecord::ShotRecord(std::size_t columns, std::size_t shots)
    : columns_(columns), shots_(shots), data_(columns * shots, 0.0) {
  if (columns_ < 1 || columns_ > 3) {
    throw precondition_error("ShotRecord: between 1 and 3 columns expected");
  }
  if (shots_ < 1) {
    throw precondition_error("ShotRecord: at least one shot required");
  }
}

double ShotRecord::at(std::size_t shot, std::size_t column) const {
  if (shot >= shots_ || column >= columns_) {
    throw precondition_error("ShotRecord: index out of range");
  }
  return data_[shot * columns_ + column];
}

void ShotRecord::set(std::size_t shot, std::size_t column, double value) {
  if (shot >= shots_ || column >= columns_) {
    throw precondition_error("ShotRecord: index out of range");
  }
  data_[shot * columns_ + column] = value;
}

void ShotRecord::write_csv(std::ostream& out) const {
  out << "shot_index";
  for (std::size_t c = 0; c < columns_; ++c) out << ",value_" << (c + 1);
  out << "\n";
  for (std::size_t s = 0; s < shots_; ++s) {
    out << s;
    for (std::size_t c = 0; c < columns_; ++c) out << "," << at(s, c);
    out << "\n";
  }
}

namespace {

// Draw one categorical index by inverting the cumulative weights.
template <typename WeightAt>
std::size_t draw_index(Pcg32& rng, std::size_t count, const WeightAt& weight) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    cumulative += weight(i);
    if (u < cumulative) return i;
  }
  return count - 1;
}

}  // namespace

ShotRecord sample_distribution(const DiscreteDistribution& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream) {
  Pcg32 rng(seed, stream);
  ShotRecord record(1, shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const std::size_t i = draw_index(
        rng, dist.size(), [&](std::size_t k) { return dist.atom(k).weight; });
    record.set(s, 0, dist.atom(i).value);
  }
  return record;
}

ShotRecord sample_distribution(const JointDistribution& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream) {
  Pcg32 rng(seed, stream);
  ShotRecord record(2, shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const std::size_t i =
        draw_index(rng, dist.size(),
                   [&](std::size_t k) { return dist.atoms()[k].weight; });
    record.set(s, 0, dist.atoms()[i].x);
    record.set(s, 1, dist.atoms()[i].y);
  }
  return record;
}

ShotRecord sample_distribution(const OutcomeDistribution8& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream) {
  Pcg32 rng(seed, stream);
  ShotRecord record(3, shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const std::size_t i =
        draw_index(rng, 8, [&](std::size_t k) { return dist.raw()[k]; });
    record.set(s, 0, i & 4 ? -1.0 : +1.0);
    record.set(s, 1, i & 2 ? -1.0 : +1.0);
    record.set(s, 2, i & 1 ? -1.0 : +1.0);
  }
  return record;
}

namespace {

// Mean squared change between the two columns, with either the plug-in
// standard error of the mean or a bootstrap one.
Estimate squared_change_estimate(const ShotRecord& shots,
                                 const EstimateOptions& options,
                                 const char* what) {
  if (shots.columns() != 2) {
    throw precondition_error(std::string(what) +
                             ": two-column shot table expected");
  }
  const std::size_t n = shots.shots();
  if (n < 2) {
    throw precondition_error(std::string(what) + ": at least 2 shots needed");
  }

  double mean = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const double d = shots.at(s, 0) - shots.at(s, 1);
    mean += d * d;
  }
  mean /= static_cast<double>(n);

  Estimate estimate{mean, 0.0, n};
  if (!options.bootstrap) {
    double ss = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double d = shots.at(s, 0) - shots.at(s, 1);
      const double centered = d * d - mean;
      ss += centered * centered;
    }
    estimate.std_error =
        std::sqrt(ss / (static_cast<double>(n - 1) * static_cast<double>(n)));
  } else {
    if (options.resamples < 2) {
      throw precondition_error(std::string(what) +
                               ": at least 2 bootstrap resamples needed");
    }
    Pcg32 rng(options.seed, 0xb007);
    std::vector<double> replicas(options.resamples, 0.0);
    double replica_mean = 0.0;
    for (double& replica : replicas) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        const auto pick = static_cast<std::size_t>(rng.uniform01() *
                                                   static_cast<double>(n));
        const std::size_t row = pick < n ? pick : n - 1;
        const double d = shots.at(row, 0) - shots.at(row, 1);
        acc += d * d;
      }
      replica = acc / static_cast<double>(n);
      replica_mean += replica;
    }
    replica_mean /= static_cast<double>(options.resamples);
    double ss = 0.0;
    for (double replica : replicas) {
      ss += (replica - replica_mean) * (replica - replica_mean);
    }
    estimate.std_error =
        std::sqrt(ss / static_cast<double>(options.resamples - 1));
  }
  return estimate;
}

}  // namespace

Estimate estimate_eta_direct(const ShotRecord& shots,
                             const EstimateOptions& options) {
  return squared_change_estimate(shots, options, "estimate_eta_direct");
}

Estimate estimate_epsilon_direct(const ShotRecord& shots,
                                 const EstimateOptions& options) {
  return squared_change_estimate(shots, options, "estimate_epsilon_direct");
}

Estimate sqrt_estimate(const Estimate& squared) {
  Estimate out{0.0, std::numeric_limits<double>::quiet_NaN(), squared.shots};
  if (squared.value > 0.0) {
    out.value = std::sqrt(squared.value);
    out.std_error = squared.std_error / (2.0 * out.value);
  }
  return out;
}

}  // namespace murlab
