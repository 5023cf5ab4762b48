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

#include "mmd/lp_engine.hpp"

#include <string>

#include "mmd/errors.hpp"

namespace mmd {
namespace {

// Dense simplex tableau in standard form: A u = b, u >= 0, b >= 0. Row
// `rows_` holds the reduced costs, its last entry the negated objective.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return cells_[r * (cols_ + 1) + c];
  }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  Rational& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (sgn(at(pr, c)) != 0) at(pr, c) *= inv;
    }
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Rational factor = at(r, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (sgn(at(pr, c)) != 0) at(r, c) -= factor * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  // Resets the cost row to `costs` priced out against the current basis.
  void PriceOut(const std::vector<Rational>& costs) {
    for (std::size_t c = 0; c < cols_; ++c) cost(c) = costs[c];
    cost(cols_) = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational cb = costs[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(rows_, c) -= cb * at(r, c);
    }
  }

  void DropRow(std::size_t r) {
    const std::size_t width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  enum class Result { kOptimal, kUnbounded };

  // Bland's rule: lowest-index improving column; ratio ties broken by the
  // lowest basic variable index. Columns >= `allowed_cols` never enter.
  Result Optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t entering = allowed_cols;
      for (std::size_t c = 0; c < allowed_cols; ++c) {
        if (sgn(cost(c)) < 0) {
          entering = c;
          break;
        }
      }
      if (entering == allowed_cols) return Result::kOptimal;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(at(r, entering)) <= 0) continue;
        Rational ratio = at(r, cols_) / at(r, entering);
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_) return Result::kUnbounded;
      Pivot(leaving, entering);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

void Validate(const RationalRows& eq, const std::vector<Rational>& eq_rhs,
              const RationalRows& ineq, const std::vector<Rational>& ineq_rhs,
              std::size_t num_vars) {
  if (eq.size() != eq_rhs.size()) {
    Fail(ErrorKind::kMalformedProgram, "equality rows and rhs differ in count");
  }
  if (ineq.size() != ineq_rhs.size()) {
    Fail(ErrorKind::kMalformedProgram, "inequality rows and rhs differ in count");
  }
  for (const auto& row : eq) {
    if (row.size() != num_vars) {
      Fail(ErrorKind::kMalformedProgram, "equality row has " + std::to_string(row.size()) +
                                             " coefficients, expected " +
                                             std::to_string(num_vars));
    }
  }
  for (const auto& row : ineq) {
    if (row.size() != num_vars) {
      Fail(ErrorKind::kMalformedProgram, "inequality row has " + std::to_string(row.size()) +
                                             " coefficients, expected " +
                                             std::to_string(num_vars));
    }
  }
}

struct Standardized {
  Tableau tableau;
  std::size_t structural;  // 2 * num_vars + slacks
};

// Free variables split as x = x+ - x-, each inequality gets a surplus
// column, every row gets an artificial. Rows are sign-normalized so b >= 0.
Standardized BuildPhaseOne(const RationalRows& eq, const std::vector<Rational>& eq_rhs,
                           const RationalRows& ineq, const std::vector<Rational>& ineq_rhs,
                           std::size_t nv) {
  const std::size_t rows = eq.size() + ineq.size();
  const std::size_t structural = 2 * nv + ineq.size();
  Standardized s{Tableau(rows, structural + rows), structural};
  Tableau& t = s.tableau;

  for (std::size_t r = 0; r < rows; ++r) {
    const bool is_eq = r < eq.size();
    const auto& coeffs = is_eq ? eq[r] : ineq[r - eq.size()];
    const Rational& b = is_eq ? eq_rhs[r] : ineq_rhs[r - eq.size()];
    const bool flip = sgn(b) < 0;
    for (std::size_t v = 0; v < nv; ++v) {
      t.at(r, v) = flip ? Rational(-coeffs[v]) : coeffs[v];
      t.at(r, nv + v) = -t.at(r, v);
    }
    if (!is_eq) {
      t.at(r, 2 * nv + (r - eq.size())) = flip ? 1 : -1;
    }
    t.at(r, structural + r) = 1;
    t.rhs(r) = flip ? Rational(-b) : b;
    t.basis()[r] = structural + r;
  }

  std::vector<Rational> costs(t.cols(), Rational(0));
  for (std::size_t c = structural; c < t.cols(); ++c) costs[c] = 1;
  t.PriceOut(costs);
  return s;
}

// Runs phase one; returns false when the system is infeasible. On success
// every artificial has left the basis (redundant rows are dropped).
bool RunPhaseOne(Standardized& s) {
  Tableau& t = s.tableau;
  t.Optimize(t.cols());
  if (sgn(t.rhs(t.rows())) != 0) return false;

  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis()[r] < s.structural) {
      ++r;
      continue;
    }
    std::size_t replacement = s.structural;
    for (std::size_t c = 0; c < s.structural; ++c) {
      if (sgn(t.at(r, c)) != 0) {
        replacement = c;
        break;
      }
    }
    if (replacement == s.structural) {
      t.DropRow(r);
    } else {
      t.Pivot(r, replacement);
      ++r;
    }
  }
  return true;
}

std::vector<Rational> ExtractPoint(Standardized& s, std::size_t nv) {
  Tableau& t = s.tableau;
  std::vector<Rational> u(s.structural, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < s.structural) u[t.basis()[r]] = t.rhs(r);
  }
  std::vector<Rational> x(nv);
  for (std::size_t v = 0; v < nv; ++v) x[v] = u[v] - u[nv + v];
  return x;
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

}  // namespace

LpOutcome SolveLp(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();
  if (nv == 0) Fail(ErrorKind::kMalformedProgram, "program has no variables");
  Validate(lp.eq, lp.eq_rhs, lp.ineq, lp.ineq_rhs, nv);

  Standardized s = BuildPhaseOne(lp.eq, lp.eq_rhs, lp.ineq, lp.ineq_rhs, nv);
  LpOutcome out;
  if (!RunPhaseOne(s)) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  Tableau& t = s.tableau;
  std::vector<Rational> costs(t.cols(), Rational(0));
  for (std::size_t v = 0; v < nv; ++v) {
    costs[v] = lp.objective[v];
    costs[nv + v] = -lp.objective[v];
  }
  t.PriceOut(costs);
  if (t.Optimize(s.structural) == Tableau::Result::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  std::vector<Rational> x = ExtractPoint(s, nv);
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < lp.ineq.size(); ++i) {
    if (Dot(lp.ineq[i], x) == lp.ineq_rhs[i]) tight.push_back(i);
  }
  out.status = LpStatus::kOptimal;
  out.objective_value = Dot(lp.objective, x);
  out.solution = std::move(x);
  out.tight_set = std::move(tight);
  return out;
}

std::optional<std::vector<Rational>> FindFeasiblePoint(const RationalRows& eq,
                                                       const std::vector<Rational>& eq_rhs,
                                                       const RationalRows& ineq,
                                                       const std::vector<Rational>& ineq_rhs,
                                                       std::size_t num_vars) {
  Validate(eq, eq_rhs, ineq, ineq_rhs, num_vars);
  if (num_vars == 0) Fail(ErrorKind::kMalformedProgram, "system has no variables");
  Standardized s = BuildPhaseOne(eq, eq_rhs, ineq, ineq_rhs, num_vars);
  if (!RunPhaseOne(s)) return std::nullopt;
  return ExtractPoint(s, num_vars);
}

bool Feasible(const RationalRows& eq, const std::vector<Rational>& eq_rhs,
              const RationalRows& ineq, const std::vector<Rational>& ineq_rhs,
              std::size_t num_vars) {
  return FindFeasiblePoint(eq, eq_rhs, ineq, ineq_rhs, num_vars).has_value();
}

LinearProgram RowGameProgram(const QMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[0] = 1;

  std::vector<Rational> simplex(n + 1, Rational(1));
  simplex[0] = 0;
  lp.eq.push_back(std::move(simplex));
  lp.eq_rhs.push_back(1);

  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> row(n + 1);
    row[0] = 1;
    for (std::size_t i = 0; i < n; ++i) row[i + 1] = -a(i, j);
    lp.ineq.push_back(std::move(row));
    lp.ineq_rhs.push_back(0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[i + 1] = 1;
    lp.ineq.push_back(std::move(row));
    lp.ineq_rhs.push_back(0);
  }
  return lp;
}

LinearProgram ColumnGameProgram(const QMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  LinearProgram lp;
  lp.objective.assign(m + 1, Rational(0));
  lp.objective[0] = -1;

  std::vector<Rational> simplex(m + 1, Rational(1));
  simplex[0] = 0;
  lp.eq.push_back(std::move(simplex));
  lp.eq_rhs.push_back(1);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(m + 1);
    row[0] = -1;
    for (std::size_t j = 0; j < m; ++j) row[j + 1] = a(i, j);
    lp.ineq.push_back(std::move(row));
    lp.ineq_rhs.push_back(0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> row(m + 1, Rational(0));
    row[j + 1] = 1;
    lp.ineq.push_back(std::move(row));
    lp.ineq_rhs.push_back(0);
  }
  return lp;
}

GameSolution SolveGame(const QMatrix& a) {
  const LpOutcome row = SolveLp(RowGameProgram(a));
  const LpOutcome col = SolveLp(ColumnGameProgram(a));
  if (row.status != LpStatus::kOptimal || col.status != LpStatus::kOptimal) {
    Fail(ErrorKind::kMalformedProgram, "game program without an optimum");
  }
  const Rational row_value = (*row.solution)[0];
  const Rational col_value = (*col.solution)[0];
  if (row_value != col_value) {
    // Strong duality cannot fail for exact arithmetic; reaching this is a bug.
    Fail(ErrorKind::kCertificationFailed, "row value " + ToString(row_value) +
                                              " != column value " + ToString(col_value));
  }
  std::vector<Rational> x(row.solution->begin() + 1, row.solution->end());
  std::vector<Rational> y(col.solution->begin() + 1, col.solution->end());
  return {GameValue{row_value}, QStrategy::Make(std::move(x)), QStrategy::Make(std::move(y))};
}

GameValue ComputeGameValue(const QMatrix& a) { return SolveGame(a).value; }

std::optional<std::vector<Rational>> SolveSquare(RationalRows m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace mmd
