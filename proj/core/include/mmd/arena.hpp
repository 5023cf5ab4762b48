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

#ifndef MMD_ARENA_HPP_
#define MMD_ARENA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mmd/designer.hpp"
#include "mmd/game_core.hpp"
#include "mmd/learners.hpp"
#include "mmd/lrca_player.hpp"

namespace mmd {

struct LearnerSpec {
  LearnerKind kind = LearnerKind::kMwu;
  RateSchedule schedule;
};

enum class ColumnPolicy { kLrca, kConstantYStar };

std::string_view ColumnPolicyName(ColumnPolicy policy);
ColumnPolicy ParseColumnPolicy(std::string_view name);

struct PolicySpec {
  ColumnPolicy kind = ColumnPolicy::kLrca;
  double epsilon_lock = kDefaultEpsilonLock;
};

inline constexpr std::size_t kDefaultHorizon = 1'000'000;
inline constexpr std::size_t kDefaultConfirmRounds = 100;

struct MatchOptions {
  std::size_t horizon = kDefaultHorizon;
  std::uint64_t seed = 0;
  // After the lock, play this many more rounds and stop.
  std::size_t confirm_rounds = kDefaultConfirmRounds;
  bool early_stop = true;
  // Skip the certificate requirement.
  bool trust = false;
  // Keep a full RoundRecord per round. Aggregates are kept either way.
  bool keep_rounds = true;
};

struct RoundRecord {
  std::size_t t = 0;
  Strategy x = Strategy::Uniform(1);
  Strategy y = Strategy::Uniform(1);
  double payoff = 0.0;          // x^T A y
  double f_gap = 0.0;           // max_j (x^T A)_j - v
  double dist_to_target = 0.0;  // |x - x*|_2
  double alpha = 0.0;
  LrcaMode mode = LrcaMode::kGuiding;
};

struct Trajectory {
  std::vector<RoundRecord> rounds;  // indexed 1..T contiguously when kept
  std::vector<double> f_gaps;       // always kept
  std::size_t length = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::optional<std::size_t> lock_round;

  // Aggregates for regret and average play.
  std::vector<double> cumulative_row_loss;  // sum_t A y_t
  std::vector<double> cumulative_col_gain;  // sum_t A^T x_t
  double total_payoff = 0.0;
  std::vector<double> sum_x;
  std::optional<Strategy> first_x;
  std::optional<Strategy> last_x;
  double min_distance = 0.0;
  double max_drift_from_first = 0.0;

  // Appends one round and updates the aggregates.
  void Append(RoundRecord record, std::span<const double> row_loss,
              std::span<const double> col_gain, bool keep_record = true);

  Strategy AverageX() const;
};

using RoundObserver = std::function<void(const RoundRecord&)>;

// Plays the repeated game. Each round the learner's x_t depends only on
// feedback through t-1, and so does the policy's y_t; both then observe
// A y_t and A^T x_t. The learner sees losses rescaled into [0, 1] by the
// matrix extremes; all recorded metrics use raw payoffs.
Trajectory RunMatch(const DesignedGame& game, const LearnerSpec& learner,
                    const PolicySpec& policy, const MatchOptions& options,
                    const RoundObserver& observer = {});

struct RegretReport {
  double row_regret = 0.0;
  double col_regret = 0.0;
  std::size_t horizon = 0;
};

RegretReport ComputeRegret(const Trajectory& traj);

// Smallest round whose f_gap is at most eps.
std::optional<std::size_t> DetectEpsNash(const Trajectory& traj, double eps);

struct Claim1Report {
  double final_distance = 0.0;
  double min_distance = 0.0;
  double max_drift_from_first = 0.0;
  std::size_t horizon = 0;
};

// Plays the constant-y* policy against a learner and measures how close the
// row player ever gets to x*. Rejects targets that are uniform on their
// support and any policy other than constant y*.
Claim1Report Claim1Experiment(const DesignedGame& game, const LearnerSpec& learner,
                              std::size_t horizon,
                              const PolicySpec& policy = {ColumnPolicy::kConstantYStar});

// Maps A y into [0, 1] by the matrix extremes; constant matrices pass through.
std::vector<double> NormalizeLoss(std::span<const double> raw, double lowest, double highest);

}  // namespace mmd

#endif  // MMD_ARENA_HPP_
