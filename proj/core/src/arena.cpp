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

#include "mmd/arena.hpp"

#include <algorithm>
#include <string>

#include "mmd/errors.hpp"

namespace mmd {

std::string_view ColumnPolicyName(ColumnPolicy policy) {
  return policy == ColumnPolicy::kLrca ? "lrca" : "constant-ystar";
}

ColumnPolicy ParseColumnPolicy(std::string_view name) {
  if (name == "lrca") return ColumnPolicy::kLrca;
  if (name == "constant-ystar") return ColumnPolicy::kConstantYStar;
  Fail(ErrorKind::kParseError, "unknown column policy '" + std::string(name) + "'");
}

std::vector<double> NormalizeLoss(std::span<const double> raw, double lowest, double highest) {
  std::vector<double> out(raw.begin(), raw.end());
  if (highest > lowest) {
    const double range = highest - lowest;
    for (double& x : out) x = (x - lowest) / range;
  }
  return out;
}

void Trajectory::Append(RoundRecord record, std::span<const double> row_loss,
                        std::span<const double> col_gain, bool keep_record) {
  if (length == 0) {
    cumulative_row_loss.assign(row_loss.size(), 0.0);
    cumulative_col_gain.assign(col_gain.size(), 0.0);
    sum_x.assign(record.x.dimension(), 0.0);
    first_x = record.x;
    min_distance = record.dist_to_target;
  }
  ++length;
  for (std::size_t i = 0; i < row_loss.size(); ++i) cumulative_row_loss[i] += row_loss[i];
  for (std::size_t j = 0; j < col_gain.size(); ++j) cumulative_col_gain[j] += col_gain[j];
  for (std::size_t i = 0; i < record.x.dimension(); ++i) sum_x[i] += record.x[i];
  total_payoff += record.payoff;
  min_distance = std::min(min_distance, record.dist_to_target);
  max_drift_from_first = std::max(max_drift_from_first, L2Distance(record.x, *first_x));
  f_gaps.push_back(record.f_gap);
  last_x = record.x;
  if (keep_record) rounds.push_back(std::move(record));
}

Strategy Trajectory::AverageX() const {
  if (length == 0) Fail(ErrorKind::kEmptyTrajectory, "no rounds played");
  std::vector<double> avg(sum_x);
  double total = 0.0;
  for (double& x : avg) {
    x /= static_cast<double>(length);
    total += x;
  }
  for (double& x : avg) x /= total;
  return Strategy::Make(std::move(avg));
}

Trajectory RunMatch(const DesignedGame& game, const LearnerSpec& learner,
                    const PolicySpec& policy, const MatchOptions& options,
                    const RoundObserver& observer) {
  if (options.horizon == 0) Fail(ErrorKind::kInvalidArgument, "horizon must be at least 1");
  if (!options.trust && !(game.certificate && game.certificate->certified())) {
    Fail(ErrorKind::kNonCertifiedGame, "game has no passing uniqueness certificate");
  }

  const Matrix a = ToDouble(game.matrix);
  const Strategy x_star = ToDouble(game.x_star);
  const Strategy y_star = ToDouble(game.y_star);
  const double v = ToDouble(game.value.v);
  const std::size_t n = a.rows();
  // Against y* itself the loss comes from the exact payoffs, so a constant
  // A y* reaches the learner as a bitwise constant vector. Summing rounded
  // entries in double would not.
  std::vector<double> loss_at_y_star;
  for (const Rational& q : RowPayoffs(game.matrix, game.y_star)) {
    loss_at_y_star.push_back(ToDouble(q));
  }

  double lowest = a(0, 0);
  double highest = a(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      lowest = std::min(lowest, a(i, j));
      highest = std::max(highest, a(i, j));
    }
  }

  LearnerState row = LearnerInit(learner.kind, n, learner.schedule);
  LrcaState col = LrcaInit(y_star, v, n, policy.epsilon_lock);

  Trajectory traj;
  traj.seed = options.seed;
  traj.value = v;
  if (options.keep_rounds) traj.rounds.reserve(std::min<std::size_t>(options.horizon, 1 << 16));

  std::optional<std::vector<double>> previous_col_gain;
  for (std::size_t t = 1; t <= options.horizon; ++t) {
    // Simultaneous commit: both sides use feedback through round t-1 only.
    Strategy x = row.current;
    Strategy y = y_star;
    double alpha = 0.0;
    LrcaMode mode = LrcaMode::kLocked;
    if (policy.kind == ColumnPolicy::kLrca) {
      std::optional<std::span<const double>> feedback;
      if (previous_col_gain) feedback = std::span<const double>(*previous_col_gain);
      mode = col.mode;
      LrcaStep step = LrcaPlay(std::move(col), feedback);
      col = std::move(step.state);
      y = std::move(step.y);
      alpha = step.alpha;
    }

    std::vector<double> row_loss = y == y_star ? loss_at_y_star : RowPayoffs(a, y);
    std::vector<double> col_gain = ColumnPayoffs(x, a);
    double payoff = 0.0;
    for (std::size_t i = 0; i < n; ++i) payoff += x[i] * row_loss[i];
    const double f = ArgMax<double>(col_gain).value;

    RoundRecord record{t, x, y, payoff, f - v, L2Distance(x, x_star), alpha, mode};
    if (observer) observer(record);

    row = LearnerStep(std::move(row), NormalizeLoss(row_loss, lowest, highest));

    // The lock is only taken after a y* round, so the iterate it freezes is
    // the one just measured.
    if (policy.kind == ColumnPolicy::kLrca && col.mode == LrcaMode::kGuiding && t % 2 == 1) {
      col = MaybeLock(std::move(col), f);
      if (col.mode == LrcaMode::kLocked) traj.lock_round = t;
    }

    traj.Append(std::move(record), row_loss, col_gain, options.keep_rounds);
    previous_col_gain = std::move(col_gain);

    if (options.early_stop && traj.lock_round && t >= *traj.lock_round + options.confirm_rounds) {
      break;
    }
  }
  return traj;
}

RegretReport ComputeRegret(const Trajectory& traj) {
  if (traj.length == 0) Fail(ErrorKind::kEmptyTrajectory, "no rounds played");
  const double best_row =
      *std::min_element(traj.cumulative_row_loss.begin(), traj.cumulative_row_loss.end());
  const double best_col =
      *std::max_element(traj.cumulative_col_gain.begin(), traj.cumulative_col_gain.end());
  return {traj.total_payoff - best_row, best_col - traj.total_payoff, traj.length};
}

std::optional<std::size_t> DetectEpsNash(const Trajectory& traj, double eps) {
  if (!(eps > 0.0)) Fail(ErrorKind::kInvalidArgument, "eps must be positive");
  for (std::size_t i = 0; i < traj.f_gaps.size(); ++i) {
    if (traj.f_gaps[i] <= eps) return i + 1;
  }
  return std::nullopt;
}

Claim1Report Claim1Experiment(const DesignedGame& game, const LearnerSpec& learner,
                              std::size_t horizon, const PolicySpec& policy) {
  if (policy.kind != ColumnPolicy::kConstantYStar) {
    Fail(ErrorKind::kMisroutedPolicy, "the constant-y* experiment cannot run another policy");
  }
  const std::vector<std::size_t> support = Support(game.x_star);
  if (support.size() < 2) Fail(ErrorKind::kBadInstance, "target must have support above 1");
  bool uniform = true;
  for (std::size_t i : support) {
    if (game.x_star[i] != game.x_star[support.front()]) uniform = false;
  }
  if (uniform) Fail(ErrorKind::kBadInstance, "target is uniform on its support");

  MatchOptions options;
  options.horizon = horizon;
  options.keep_rounds = false;
  const Trajectory traj = RunMatch(game, learner, policy, options);
  return {L2Distance(*traj.last_x, ToDouble(game.x_star)), traj.min_distance,
          traj.max_drift_from_first, traj.length};
}

}  // namespace mmd
