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

/// @file sampling.hpp
/// Finite-statistics layer: reproducible shot sampling from the exact
/// distributions and plug-in estimators with standard errors, so every
/// analytic quantity can be compared against what an experiment of N runs
/// would record.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "murlab/error_measures.hpp"
#include "murlab/lund_wiseman.hpp"
#include "murlab/transport.hpp"

namespace murlab {

/// PCG-XSH-RR 32-bit generator. Distinct (seed, stream) pairs give
/// independent, reproducible substreams.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t operator()();

  /// Uniform double in (0, 1).
  double uniform01();

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

/// A table of recorded shots: one row per repetition, one column per value
/// read out in that repetition.
class ShotRecord {
 public:
  ShotRecord(std::size_t columns, std::size_t shots);

  std::size_t columns() const { return columns_; }
  std::size_t shots() const { return shots_; }
  double at(std::size_t shot, std::size_t column) const;
  void set(std::size_t shot, std::size_t column, double value);

  /// CSV export: header "shot_index,value_1,..." followed by one row per
  /// shot.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t columns_;
  std::size_t shots_;
  std::vector<double> data_;
};

/// Inverse-CDF sampling. Deterministic for a fixed (seed, stream).
ShotRecord sample_distribution(const DiscreteDistribution& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream = 0);
ShotRecord sample_distribution(const JointDistribution& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream = 0);
ShotRecord sample_distribution(const OutcomeDistribution8& dist,
                               std::size_t shots, std::uint64_t seed,
                               std::uint64_t stream = 0);

struct Estimate {
  double value = 0.0;      ///< point estimate
  double std_error = 0.0;  ///< standard error of the estimate
  std::size_t shots = 0;
};

struct EstimateOptions {
  bool bootstrap = false;  ///< replace the plug-in standard error by a
                           ///< bootstrap one
  int resamples = 200;
  std::uint64_t seed = 0;  ///< RNG seed for the bootstrap resampling
};

/// Plug-in estimate of eta^2 from two-column (initial, final) shots of the
/// sandwich protocol: the sample mean of (initial - final)^2, with the
/// sample standard error of that mean.
Estimate estimate_eta_direct(const ShotRecord& shots,
                             const EstimateOptions& options = {});

/// Plug-in estimate of epsilon^2 from two-column (target, approximator)
/// shots of the value-comparison protocol.
Estimate estimate_epsilon_direct(const ShotRecord& shots,
                                 const EstimateOptions& options = {});

/// Delta-method square root: maps an estimate of a squared quantity to an
/// estimate of the quantity (std error divided by 2 sqrt(value)).
Estimate sqrt_estimate(const Estimate& squared);

}  // namespace murlab
