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

#include "mmd/lrca_player.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mmd/errors.hpp"

namespace mmd {

std::string_view LrcaModeName(LrcaMode mode) {
  return mode == LrcaMode::kGuiding ? "Guiding" : "Locked";
}

LrcaState LrcaInit(Strategy y_star, double value, std::size_t n, double epsilon_lock) {
  if (n == 0) Fail(ErrorKind::kBadDimension, "row player needs at least one action");
  if (!(epsilon_lock > 0.0)) Fail(ErrorKind::kInvalidArgument, "epsilon_lock must be positive");
  LrcaState state;
  state.y_star = std::move(y_star);
  state.value = value;
  state.n = n;
  state.epsilon_lock = epsilon_lock;
  return state;
}

LrcaStep LrcaPlay(LrcaState state, std::optional<std::span<const double>> feedback) {
  const std::size_t t = state.round + 1;
  state.round = t;
  if (state.mode == LrcaMode::kLocked || t % 2 == 1) {
    state.last_alpha = 0.0;
    Strategy y = state.y_star;
    return {std::move(state), std::move(y), 0.0};
  }

  if (!feedback) {
    Fail(ErrorKind::kMissingFeedback, "even round " + std::to_string(t) +
                                          " needs the previous round's column payoffs");
  }
  const std::size_t m = state.y_star.dimension();
  if (feedback->size() != m) {
    Fail(ErrorKind::kDimensionMismatch, "feedback has " + std::to_string(feedback->size()) +
                                            " entries, expected " + std::to_string(m));
  }

  const BestResponse<double> best = ArgMax<double>(*feedback);
  const double scale = std::max(static_cast<double>(state.n) / 4.0, 2.0);
  const double alpha = std::clamp((best.value - state.value) / scale, 0.0, 1.0);

  std::vector<double> w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = (1.0 - alpha) * state.y_star[j];
  w[best.index] += alpha;
  state.last_alpha = alpha;
  return {std::move(state), Strategy::Make(std::move(w)), alpha};
}

LrcaState MaybeLock(LrcaState state, double f_current) {
  if (state.mode == LrcaMode::kGuiding && f_current - state.value <= state.epsilon_lock) {
    state.mode = LrcaMode::kLocked;
  }
  return state;
}

}  // namespace mmd
