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

#ifndef MMD_LP_ENGINE_HPP_
#define MMD_LP_ENGINE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mmd/game_core.hpp"
#include "mmd/rational.hpp"

namespace mmd {

using RationalRows = std::vector<std::vector<Rational>>;

// minimize objective^T x  subject to  eq * x = eq_rhs,  ineq * x >= ineq_rhs.
// Variables are free; sign constraints belong in the inequality block.
struct LinearProgram {
  std::vector<Rational> objective;
  RationalRows eq;
  std::vector<Rational> eq_rhs;
  RationalRows ineq;
  std::vector<Rational> ineq_rhs;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<std::vector<Rational>> solution;
  std::optional<Rational> objective_value;
  // Indices of inequality rows binding at the solution.
  std::optional<std::vector<std::size_t>> tight_set;

  friend bool operator==(const LpOutcome&, const LpOutcome&) = default;
};

// Two-phase primal simplex over exact rationals with Bland's pivot rule.
// Returns an optimal basic solution; identical inputs give identical outputs.
// Throws Error(kMalformedProgram) when dimensions disagree.
LpOutcome SolveLp(const LinearProgram& lp);

// Phase-1 feasibility of {x : eq * x = eq_rhs, ineq * x >= ineq_rhs}.
// `num_vars` is needed when both blocks are empty.
std::optional<std::vector<Rational>> FindFeasiblePoint(const RationalRows& eq,
                                                       const std::vector<Rational>& eq_rhs,
                                                       const RationalRows& ineq,
                                                       const std::vector<Rational>& ineq_rhs,
                                                       std::size_t num_vars);

bool Feasible(const RationalRows& eq, const std::vector<Rational>& eq_rhs,
              const RationalRows& ineq, const std::vector<Rational>& ineq_rhs,
              std::size_t num_vars);

// The row player's minimax program: min v s.t. v - sum_i A_ij x_i >= 0,
// sum x = 1, x >= 0. Variable order is (v, x_0, ..., x_{n-1}).
LinearProgram RowGameProgram(const QMatrix& a);

// The column player's program, as a minimization of -w over (w, y).
LinearProgram ColumnGameProgram(const QMatrix& a);

struct GameSolution {
  GameValue value;
  QStrategy row;
  QStrategy col;
};

// Solves both players' programs and checks that their values coincide.
GameSolution SolveGame(const QMatrix& a);

GameValue ComputeGameValue(const QMatrix& a);

inline constexpr std::size_t kDefaultOracleCap = 10;

struct MinimaxFace {
  GameValue value;
  std::vector<QStrategy> row_vertices;  // lexicographically sorted, distinct
  bool unique_row = false;
};

// Independent oracle: enumerates every (row support, tight column set) pair
// of equal size, solves the induced square system for (x, w), and keeps the
// feasible candidates. The smallest w is the value; candidates attaining it
// are the vertices of the row player's optimal set. Exponential in the
// matrix size, so rows and columns are capped.
MinimaxFace EnumerateMinimaxRows(const QMatrix& a, std::size_t cap = kDefaultOracleCap);

// Exact Gaussian elimination on a square system; nullopt when singular.
std::optional<std::vector<Rational>> SolveSquare(RationalRows m, std::vector<Rational> rhs);

}  // namespace mmd

#endif  // MMD_LP_ENGINE_HPP_
