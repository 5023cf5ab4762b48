// Copyright 2026 The mmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMD_LEARNERS_HPP_
#define MMD_LEARNERS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mmd/game_core.hpp"

namespace mmd {

enum class LearnerKind { kMwu, kFtrlEntropy, kFtrlEuclidean };

std::string_view LearnerKindName(LearnerKind kind);
LearnerKind ParseLearnerKind(std::string_view name);

struct RateSchedule {
  enum class Kind { kConstant, kInverseSqrt };
  Kind kind = Kind::kConstant;
  double eta = 1.0;

  static RateSchedule Constant(double eta);
  static RateSchedule InverseSqrt(double eta);

  // Step size after `t` >= 1 observed losses.
  double At(std::size_t t) const;
};

// sqrt(ln n / t) for the entropic learners, 1 / sqrt(t) for Euclidean FTRL.
RateSchedule DefaultSchedule(LearnerKind kind, std::size_t n);

// Follow-the-regularized-leader state over the row simplex. The iterate is
// a function of the cumulative loss and the round count only.
struct LearnerState {
  LearnerKind kind = LearnerKind::kMwu;
  std::vector<double> cumulative_loss;
  std::size_t round = 0;
  RateSchedule rate;
  Strategy current = Strategy::Uniform(1);
};

LearnerState LearnerInit(LearnerKind kind, std::size_t n, RateSchedule schedule);

// Accumulates `loss` and recomputes the iterate:
//   entropic kinds: x_i proportional to exp(-eta_t * (L_i - min L));
//   Euclidean: x = argmin_x <x, L> + |x|^2 / (2 eta_t) = proj(-eta_t L).
LearnerState LearnerStep(LearnerState state, std::span<const double> loss);

// Euclidean projection onto the probability simplex (sort and threshold).
Strategy ProjectSimplex(std::span<const double> point);

struct StabilityReport {
  bool stable = false;
  double max_drift = 0.0;
};

// Feeds A y* for `rounds` rounds from the initial state and reports the
// largest change between consecutive iterates.
StabilityReport StabilityProbe(LearnerKind kind, RateSchedule schedule, const Matrix& a,
                               const Strategy& y_star, std::size_t rounds);

}  // namespace mmd

#endif  // MMD_LEARNERS_HPP_
