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

#ifndef MMD_LRCA_PLAYER_HPP_
#define MMD_LRCA_PLAYER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "mmd/game_core.hpp"

namespace mmd {

enum class LrcaMode { kGuiding, kLocked };

std::string_view LrcaModeName(LrcaMode mode);

inline constexpr double kDefaultEpsilonLock = 0.05;

struct LrcaState {
  Strategy y_star = Strategy::Uniform(1);
  double value = 0.0;
  std::size_t n = 1;       // row player's action count
  std::size_t round = 0;   // rounds already played
  LrcaMode mode = LrcaMode::kGuiding;
  double epsilon_lock = kDefaultEpsilonLock;
  double last_alpha = 0.0;
};

LrcaState LrcaInit(Strategy y_star, double value, std::size_t n,
                   double epsilon_lock = kDefaultEpsilonLock);

struct LrcaStep {
  LrcaState state;
  Strategy y;
  double alpha = 0.0;
};

// Plays round state.round + 1. Odd rounds (and every round once locked)
// emit y*. Even rounds read the previous round's column payoffs A^T x_{t-1},
// take e_t as the lowest-index best response with value f, and emit
//   y_t = (1 - alpha_t) y* + alpha_t e_t,
//   alpha_t = clamp((f - v) / max(n / 4, 2), 0, 1).
LrcaStep LrcaPlay(LrcaState state, std::optional<std::span<const double>> feedback);

// Locks onto y* for good once f - v <= epsilon_lock.
LrcaState MaybeLock(LrcaState state, double f_current);

}  // namespace mmd

#endif  // MMD_LRCA_PLAYER_HPP_
