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

#ifndef MMD_VERIFIER_HPP_
#define MMD_VERIFIER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mmd/game_core.hpp"
#include "mmd/lp_engine.hpp"

namespace mmd {

struct PairCheck {
  bool ok = false;
  GameValue value;  // x*^T A y*
};

// Checks both players' optimality conditions for (x*, y*) exactly:
//   x*^T A_j <= v for every column, with equality on support(y*);
//   (A y*)_i >= v for every row, with equality on support(x*).
PairCheck CheckMinimaxPair(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star);

struct LemmaReport {
  // Every support row k of x* has a tight column j with 0 < A_kj < A_ij for
  // all i != k (the bound form of the column pattern).
  bool ok = false;
  // Additionally, each covering column is constant off support(x*) and
  // constant on support(x*) \ {k} (the single-value form of the pattern).
  bool exact_pattern = false;
  // Stronger form that actually forces uniqueness: each support row k has a
  // tight column reading gamma at k, a constant beta > gamma on the rest of
  // the support, and entries >= beta off the support. The bound form alone
  // does not suffice once off-support entries drop below beta.
  bool sound = false;
  // Covering column per support row, in support order; nullopt if none.
  std::vector<std::optional<std::size_t>> covering_column;
};

LemmaReport LemmaColumnsDetail(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star);
bool CheckLemmaColumns(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star);

struct UniquenessCheck {
  bool unique = false;
  // A nonzero direction d with sum d = 0, d_i >= 0 off support(x*), and
  // d^T A_j <= 0 on every tight column; x* + t d stays optimal for small t.
  std::optional<std::vector<Rational>> witness;
};

// Decides whether x* is the only minimax strategy of the row player.
// With v-hat fixed at zero, the uniqueness system is homogeneous; each
// candidate k in support(x*) is tried with the normalization d_k = -1.
// Throws Error(kNotAMinimaxPair) when (x*, y*) fails CheckMinimaxPair.
UniquenessCheck CheckRowUniquenessKkt(const QMatrix& a, const QStrategy& x_star,
                                      const QStrategy& y_star);

struct MinimaxCertificate {
  bool pair_ok = false;
  GameValue value;
  bool lemma_ok = false;
  bool lemma_exact_pattern = false;
  bool lemma_sound = false;
  bool kkt_unique = false;
  std::optional<bool> oracle_agrees;
  std::optional<std::vector<Rational>> witness;

  bool certified() const { return pair_ok && kkt_unique && oracle_agrees.value_or(true); }

  friend bool operator==(const MinimaxCertificate&, const MinimaxCertificate&) = default;
};

// Runs the pair, column-pattern and KKT checks, plus the enumeration oracle
// when requested and the matrix is within `cap`. When the pair check fails
// the uniqueness checks are skipped and reported false.
MinimaxCertificate Certify(const QMatrix& a, const QStrategy& x_star, const QStrategy& y_star,
                           bool run_oracle, std::size_t cap = kDefaultOracleCap);

}  // namespace mmd

#endif  // MMD_VERIFIER_HPP_
