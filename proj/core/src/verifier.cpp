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

#include "mmd/verifier.hpp"

#include <string>

#include "mmd/errors.hpp"

namespace mmd {
namespace {

void CheckShapes(const QMatrix& a, const QStrategy& x, const QStrategy& y) {
  if (x.dimension() != a.rows() || y.dimension() != a.cols()) {
    Fail(ErrorKind::kDimensionMismatch,
         "matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " but strategies have dimensions " + std::to_string(x.dimension()) + " and " +
             std::to_string(y.dimension()));
  }
}

std::vector<std::size_t> TightColumns(const QMatrix& a, const QStrategy& x, const Rational& v) {
  const std::vector<Rational> col = ColumnPayoffs(x, a);
  std::vector<std::size_t> tight;
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (col[j] == v) tight.push_back(j);
  }
  return tight;
}

}  // namespace

PairCheck CheckMinimaxPair(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star) {
  CheckShapes(a, x_star, y_star);
  const Rational v = ExpectedPayoff(x_star, a, y_star);
  PairCheck out{true, GameValue{v}};

  const std::vector<Rational> col = ColumnPayoffs(x_star, a);
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (col[j] > v || (sgn(y_star[j]) > 0 && col[j] != v)) out.ok = false;
  }
  const std::vector<Rational> row = RowPayoffs(a, y_star);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < v || (sgn(x_star[i]) > 0 && row[i] != v)) out.ok = false;
  }
  return out;
}

LemmaReport LemmaColumnsDetail(const QMatrix& a, const QStrategy& x_star,
                               const QStrategy& y_star) {
  CheckShapes(a, x_star, y_star);
  const Rational v = ExpectedPayoff(x_star, a, y_star);
  const std::vector<std::size_t> tight = TightColumns(a, x_star, v);
  const std::vector<std::size_t> support = Support(x_star);

  LemmaReport report;
  report.ok = true;
  report.exact_pattern = true;
  report.sound = true;
  for (std::size_t k : support) {
    bool k_sound = false;
    for (std::size_t j : tight) {
      std::optional<Rational> beta;
      bool fits = true;
      for (std::size_t i : support) {
        if (i == k) continue;
        if (!beta) beta = a(i, j);
        if (*beta != a(i, j)) fits = false;
      }
      if (!fits || !beta || !(*beta > a(k, j))) continue;
      for (std::size_t i = 0; i < a.rows() && fits; ++i) {
        if (sgn(x_star[i]) == 0 && a(i, j) < *beta) fits = false;
      }
      if (fits) {
        k_sound = true;
        break;
      }
    }
    if (!k_sound) report.sound = false;

    std::optional<std::size_t> cover;
    bool cover_exact = false;
    for (std::size_t j : tight) {
      const Rational& gamma = a(k, j);
      if (sgn(gamma) <= 0) continue;
      bool dominated = true;
      for (std::size_t i = 0; i < a.rows() && dominated; ++i) {
        if (i != k && !(a(i, j) > gamma)) dominated = false;
      }
      if (!dominated) continue;

      std::optional<Rational> alpha, beta;
      bool exact = true;
      for (std::size_t i = 0; i < a.rows() && exact; ++i) {
        if (i == k) continue;
        auto& slot = sgn(x_star[i]) == 0 ? alpha : beta;
        if (!slot) {
          slot = a(i, j);
        } else if (*slot != a(i, j)) {
          exact = false;
        }
      }
      if (!cover) cover = j;
      if (exact) {
        cover = j;
        cover_exact = true;
        break;
      }
    }
    report.covering_column.push_back(cover);
    if (!cover) report.ok = false;
    if (!cover_exact) report.exact_pattern = false;
  }
  if (!report.ok) report.exact_pattern = false;
  return report;
}

bool CheckLemmaColumns(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star) {
  return LemmaColumnsDetail(a, x_star, y_star).ok;
}

UniquenessCheck CheckRowUniquenessKkt(const QMatrix& a, const QStrategy& x_star,
                                      const QStrategy& y_star) {
  const PairCheck pair = CheckMinimaxPair(a, x_star, y_star);
  if (!pair.ok) {
    Fail(ErrorKind::kNotAMinimaxPair, "uniqueness is only defined for a minimax pair");
  }
  const std::size_t n = a.rows();
  const std::vector<std::size_t> tight = TightColumns(a, x_star, pair.value.v);

  RationalRows ineq;
  std::vector<Rational> ineq_rhs;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x_star[i]) != 0) continue;
    std::vector<Rational> row(n, Rational(0));
    row[i] = 1;
    ineq.push_back(std::move(row));
    ineq_rhs.push_back(0);
  }
  for (std::size_t j : tight) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = -a(i, j);
    ineq.push_back(std::move(row));
    ineq_rhs.push_back(0);
  }

  for (std::size_t k : Support(x_star)) {
    RationalRows eq(2, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) eq[0][i] = 1;
    eq[1][k] = 1;
    const std::vector<Rational> eq_rhs{Rational(0), Rational(-1)};
    if (auto point = FindFeasiblePoint(eq, eq_rhs, ineq, ineq_rhs, n)) {
      return {false, std::move(point)};
    }
  }
  return {true, std::nullopt};
}

MinimaxCertificate Certify(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star,
                           bool run_oracle, std::size_t cap) {
  MinimaxCertificate cert;
  const PairCheck pair = CheckMinimaxPair(a, x_star, y_star);
  cert.pair_ok = pair.ok;
  cert.value = pair.value;
  if (pair.ok) {
    const LemmaReport lemma = LemmaColumnsDetail(a, x_star, y_star);
    cert.lemma_ok = lemma.ok;
    cert.lemma_exact_pattern = lemma.exact_pattern;
    cert.lemma_sound = lemma.sound;
    UniquenessCheck kkt = CheckRowUniquenessKkt(a, x_star, y_star);
    cert.kkt_unique = kkt.unique;
    cert.witness = std::move(kkt.witness);
    if (cert.lemma_sound && !cert.kkt_unique) {
      Fail(ErrorKind::kCertificationFailed,
           "sound column pattern present but the uniqueness system is feasible");
    }
  }
  if (run_oracle && a.rows() <= cap && a.cols() <= cap) {
    const MinimaxFace face = EnumerateMinimaxRows(a, cap);
    const bool oracle_unique_at_target = face.unique_row && face.row_vertices.front() == x_star;
    cert.oracle_agrees = oracle_unique_at_target == cert.kkt_unique;
  }
  return cert;
}

}  // namespace mmd
