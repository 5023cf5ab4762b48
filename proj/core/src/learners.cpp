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

#include "mmd/learners.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mmd/errors.hpp"

namespace mmd {
namespace {

Strategy SoftMin(const std::vector<double>& cumulative, double eta) {
  const double lowest = *std::min_element(cumulative.begin(), cumulative.end());
  std::vector<double> w(cumulative.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-eta * (cumulative[i] - lowest));
    total += w[i];
  }
  for (double& x : w) x /= total;
  return Strategy::Make(std::move(w));
}

}  // namespace

std::string_view LearnerKindName(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::kMwu: return "mwu";
    case LearnerKind::kFtrlEntropy: return "ftrl-entropy";
    case LearnerKind::kFtrlEuclidean: return "ftrl-euclidean";
  }
  return "unknown";
}

LearnerKind ParseLearnerKind(std::string_view name) {
  for (LearnerKind k : {LearnerKind::kMwu, LearnerKind::kFtrlEntropy, LearnerKind::kFtrlEuclidean}) {
    if (LearnerKindName(k) == name) return k;
  }
  Fail(ErrorKind::kParseError, "unknown learner kind '" + std::string(name) + "'");
}

RateSchedule RateSchedule::Constant(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    Fail(ErrorKind::kInvalidArgument, "step size must be positive");
  }
  return {Kind::kConstant, eta};
}

RateSchedule RateSchedule::InverseSqrt(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    Fail(ErrorKind::kInvalidArgument, "step size must be positive");
  }
  return {Kind::kInverseSqrt, eta};
}

double RateSchedule::At(std::size_t t) const {
  if (kind == Kind::kConstant || t == 0) return eta;
  return eta / std::sqrt(static_cast<double>(t));
}

RateSchedule DefaultSchedule(LearnerKind kind, std::size_t n) {
  if (kind == LearnerKind::kFtrlEuclidean) return RateSchedule::InverseSqrt(1.0);
  // ln 1 = 0 would give a zero rate; a single action makes the rate moot.
  const double scale = n >= 2 ? std::sqrt(std::log(static_cast<double>(n))) : 1.0;
  return RateSchedule::InverseSqrt(scale);
}

LearnerState LearnerInit(LearnerKind kind, std::size_t n, RateSchedule schedule) {
  if (n == 0) Fail(ErrorKind::kBadDimension, "learner needs at least one action");
  LearnerState state;
  state.kind = kind;
  state.cumulative_loss.assign(n, 0.0);
  state.rate = schedule;
  state.current = Strategy::Uniform(n);
  return state;
}

Strategy ProjectSimplex(std::span<const double> point) {
  if (point.empty()) Fail(ErrorKind::kBadDimension, "cannot project an empty vector");
  for (double p : point) {
    if (!std::isfinite(p)) Fail(ErrorKind::kNonFiniteInput, "projection input is not finite");
  }
  std::vector<double> sorted(point.begin(), point.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }

  std::vector<double> out(point.size());
  double total = 0.0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    out[i] = std::max(point[i] - theta, 0.0);
    total += out[i];
  }
  // Cancellation in the prefix sums can leave the mass a few ulps off.
  if (total != 1.0) {
    for (double& x : out) x /= total;
  }
  return Strategy::Make(std::move(out));
}

LearnerState LearnerStep(LearnerState state, std::span<const double> loss) {
  if (loss.size() != state.cumulative_loss.size()) {
    Fail(ErrorKind::kDimensionMismatch, "loss has " + std::to_string(loss.size()) +
                                            " entries, learner has " +
                                            std::to_string(state.cumulative_loss.size()));
  }
  for (double l : loss) {
    if (!std::isfinite(l)) Fail(ErrorKind::kNonFiniteLoss, "loss entry is not finite");
  }
  for (std::size_t i = 0; i < loss.size(); ++i) state.cumulative_loss[i] += loss[i];
  ++state.round;

  const double eta = state.rate.At(state.round);
  switch (state.kind) {
    case LearnerKind::kMwu:
    case LearnerKind::kFtrlEntropy:
      state.current = SoftMin(state.cumulative_loss, eta);
      break;
    case LearnerKind::kFtrlEuclidean: {
      const double lowest =
          *std::min_element(state.cumulative_loss.begin(), state.cumulative_loss.end());
      std::vector<double> point(loss.size());
      for (std::size_t i = 0; i < point.size(); ++i) {
        point[i] = -eta * (state.cumulative_loss[i] - lowest);
      }
      state.current = ProjectSimplex(point);
      break;
    }
  }
  return state;
}

StabilityReport StabilityProbe(LearnerKind kind, RateSchedule schedule, const Matrix& a,
                               const Strategy& y_star, std::size_t rounds) {
  if (rounds < 2) Fail(ErrorKind::kInvalidArgument, "stability probe needs at least 2 rounds");
  const std::vector<double> loss = RowPayoffs(a, y_star);
  LearnerState state = LearnerInit(kind, a.rows(), schedule);
  StabilityReport report;
  for (std::size_t t = 0; t < rounds; ++t) {
    Strategy previous = state.current;
    state = LearnerStep(std::move(state), loss);
    report.max_drift = std::max(report.max_drift, L2Distance(previous, state.current));
  }
  report.stable = report.max_drift <= kFloatTolerance;
  return report;
}

}  // namespace mmd
