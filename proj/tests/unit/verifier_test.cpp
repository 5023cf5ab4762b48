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


#include <random>

#include <gtest/gtest.h>

#include "mmd/mmd.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mmd {
namespace {

Rational Q(const char* s) { return ParseRational(s); }

QStrategy QS(std::initializer_list<const char*> w) {
  std::vector<Rational> v;
  for (const char* s : w) v.push_back(Q(s));
  return QStrategy::Make(v);
}

QMatrix QM(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    out.emplace_back();
    for (const char* s : r) out.back().push_back(Q(s));
  }
  return QMatrix::FromRows(out);
}

const QMatrix kSmall = QM({{"0.6", "1.4"}, {"1.4", "0.6"}});
const QMatrix kOnes = QM({{"1", "1"}, {"1", "1"}});
const QStrategy kHalf = QS({"1/2", "1/2"});

// Checks every constraint of the uniqueness system at `d`.
void ExpectValidWitness(const QMatrix& a, const QStrategy& x, const QStrategy& y,
                        const std::vector<Rational>& d) {
  ASSERT_EQ(d.size(), a.rows());
  Rational sum(0);
  bool nonzero = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += d[i];
    nonzero = nonzero || sgn(d[i]) != 0;
    if (sgn(x[i]) == 0) EXPECT_GE(d[i], 0);
  }
  EXPECT_EQ(sum, 0);
  EXPECT_TRUE(nonzero);
  const Rational v = ExpectedPayoff(x, a, y);
  const std::vector<Rational> cols = ColumnPayoffs(x, a);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (cols[j] != v) continue;  // only tight columns constrain d
    Rational dot(0);
    for (std::size_t i = 0; i < a.rows(); ++i) dot += d[i] * a(i, j);
    EXPECT_LE(dot, 0);
    if (sgn(y[j]) > 0) EXPECT_EQ(dot, 0);
  }
}

TEST(PairTest, Examples) {
  PairCheck p = CheckMinimaxPair(kSmall, kHalf, kHalf);
  EXPECT_TRUE(p.ok);
  EXPECT_EQ(p.value.v, 1);
  p = CheckMinimaxPair(QM({{"0", "1"}, {"1", "0"}}), QS({"1", "0"}), kHalf);
  EXPECT_FALSE(p.ok);
  EXPECT_EQ(p.value.v, Q("1/2"));
  p = CheckMinimaxPair(kOnes, QS({"1/3", "2/3"}), QS({"1", "0"}));
  EXPECT_TRUE(p.ok);
  EXPECT_EQ(p.value.v, 1);
}

TEST(ColumnPatternTest, Examples) {
  EXPECT_TRUE(CheckLemmaColumns(kSmall, kHalf, kHalf));
  EXPECT_FALSE(CheckLemmaColumns(kOnes, kHalf, kHalf));
  EXPECT_TRUE(CheckLemmaColumns(QM({{"1", "1"}, {"1.5", "1"}}), QS({"1", "0"}), QS({"1", "0"})));
  const LemmaReport r = LemmaColumnsDetail(kSmall, kHalf, kHalf);
  EXPECT_TRUE(r.exact_pattern);
  EXPECT_TRUE(r.sound);
  EXPECT_EQ(r.covering_column, (std::vector<std::optional<std::size_t>>{0, 1}));
}

// The bound form of the column pattern holds here, yet x* is not unique:
// the off-support row sits below the support rows' common entry.
TEST(ColumnPatternTest, BoundFormIsNotSufficient) {
  const QMatrix a = QM({{"0.6", "1.4", "1"}, {"1.4", "0.6", "1"}, {"1", "1", "1"}});
  const QStrategy x = QS({"1/2", "1/2", "0"});
  const QStrategy y = QS({"1/2", "1/2", "0"});
  const LemmaReport r = LemmaColumnsDetail(a, x, y);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.exact_pattern);
  EXPECT_FALSE(r.sound);
  const MinimaxCertificate cert = Certify(a, x, y, true);
  EXPECT_TRUE(cert.lemma_ok);
  EXPECT_FALSE(cert.kkt_unique);
  EXPECT_EQ(cert.oracle_agrees, true);
}

TEST(KktTest, Examples) {
  UniquenessCheck u = CheckRowUniquenessKkt(kSmall, kHalf, kHalf);
  EXPECT_TRUE(u.unique);
  EXPECT_FALSE(u.witness.has_value());

  u = CheckRowUniquenessKkt(kOnes, kHalf, kHalf);
  EXPECT_FALSE(u.unique);
  ASSERT_TRUE(u.witness.has_value());
  // Proportional to [1, -1].
  EXPECT_EQ((*u.witness)[0], -(*u.witness)[1]);
  ExpectValidWitness(kOnes, kHalf, kHalf, *u.witness);

  const QStrategy x = QS({"1/2", "1/2", "0"});
  const QStrategy y = QS({"0.4", "0.4", "0.2"});
  const DesignedGame g = Design(x, y, Rational(1), {std::nullopt, Q("0.1")});
  EXPECT_TRUE(CheckRowUniquenessKkt(g.matrix, x, y).unique);
  const QMatrix literal = QM({{"0.875", "1.125", "1"}, {"1.125", "0.875", "1"}, {"1", "1", "1"}});
  u = CheckRowUniquenessKkt(literal, x, y);
  EXPECT_FALSE(u.unique);
  ExpectValidWitness(literal, x, y, *u.witness);
}

TEST(KktTest, RequiresMinimaxPair) {
  try {
    CheckRowUniquenessKkt(QM({{"0", "1"}, {"1", "0"}}), QS({"1", "0"}), kHalf);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAMinimaxPair);
  }
}

// With only support(y*) columns, y* = [0, 1] would leave column 0 out and
// admit d = [-1, 1]; the tight-column set keeps the verdict independent of
// which optimal y* is supplied.
TEST(KktTest, UsesTightColumnsNotJustTheSupportOfY) {
  const QMatrix a = QM({{"1", "1"}, {"1.5", "1"}});
  EXPECT_TRUE(CheckRowUniquenessKkt(a, QS({"1", "0"}), QS({"1", "0"})).unique);
  EXPECT_TRUE(CheckRowUniquenessKkt(a, QS({"1", "0"}), QS({"0", "1"})).unique);
}

TEST(CertifyTest, Examples) {
  MinimaxCertificate c = Certify(kSmall, kHalf, kHalf, true);
  EXPECT_TRUE(c.pair_ok && c.lemma_ok && c.kkt_unique);
  EXPECT_EQ(c.oracle_agrees, true);
  EXPECT_TRUE(c.certified());

  c = Certify(kOnes, kHalf, kHalf, true);
  EXPECT_TRUE(c.pair_ok);
  EXPECT_FALSE(c.lemma_ok);
  EXPECT_FALSE(c.kkt_unique);
  EXPECT_EQ(c.oracle_agrees, true);
  EXPECT_TRUE(c.witness.has_value());
  EXPECT_FALSE(c.certified());

  try {
    Certify(kSmall, QS({"1/3", "1/3", "1/3"}), kHalf, true);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }

  c = Certify(QM({{"0", "1"}, {"1", "0"}}), QS({"1", "0"}), kHalf, false);
  EXPECT_FALSE(c.pair_ok);
  EXPECT_FALSE(c.kkt_unique);
  EXPECT_FALSE(c.oracle_agrees.has_value());
}

class VerifierProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};

  void CheckAgreement(const QMatrix& a, const QStrategy& x, const QStrategy& y) {
    const MinimaxCertificate cert = Certify(a, x, y, true);
    ASSERT_TRUE(cert.pair_ok);
    const MinimaxFace face = EnumerateMinimaxRows(a);
    EXPECT_EQ(cert.kkt_unique, face.unique_row);
    if (face.unique_row) EXPECT_EQ(face.row_vertices.front(), x);
    EXPECT_EQ(cert.oracle_agrees, true);
    if (!cert.kkt_unique) {
      ASSERT_TRUE(cert.witness.has_value());
      ExpectValidWitness(a, x, y, *cert.witness);
    }
    if (cert.lemma_sound) EXPECT_TRUE(cert.kkt_unique);
    EXPECT_EQ(ComputeGameValue(a), cert.value);
    if (a.rows() <= 3) EXPECT_EQ(testing::FourierMotzkinUnique(a, x), cert.kkt_unique);
  }
};

TEST_F(VerifierProperty, RandomMatricesAgreeWithOracle) {
  int non_unique = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t n = dim(rng), m = dim(rng);
    // Narrow entry ranges make ties and non-unique optima common.
    const int hi = trial % 2 == 0 ? 2 : 30;
    const QMatrix a = testing::RandomRationalMatrix(rng, n, m, 0, hi, 1);
    const GameSolution sol = SolveGame(a);
    CheckAgreement(a, sol.row, sol.col);
    if (!EnumerateMinimaxRows(a).unique_row) ++non_unique;
  }
  EXPECT_GT(non_unique, 10);
}

TEST_F(VerifierProperty, DesignedGamesAgreeWithOracle) {
  for (int trial = 0; trial < 60; ++trial) {
    const testing::RandomSpec spec = testing::DrawSpec(rng);
    const DesignedGame g = Design(spec.x_star, spec.y_star, spec.v);
    CheckAgreement(g.matrix, spec.x_star, spec.y_star);
  }
}

}  // namespace
}  // namespace mmd
