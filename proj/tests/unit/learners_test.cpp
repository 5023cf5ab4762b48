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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mmd/mmd.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace mmd {
namespace {

constexpr LearnerKind kAllKinds[] = {LearnerKind::kMwu, LearnerKind::kFtrlEntropy,
                                     LearnerKind::kFtrlEuclidean};

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

void ExpectNear(const Strategy& s, const std::vector<double>& want, double tol) {
  ASSERT_EQ(s.dimension(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(s[i], want[i], tol) << i;
}

TEST(LearnerInitTest, Examples) {
  ExpectNear(LearnerInit(LearnerKind::kMwu, 2, RateSchedule::Constant(0.1)).current, {0.5, 0.5},
             0.0);
  const LearnerState s =
      LearnerInit(LearnerKind::kFtrlEuclidean, 3, RateSchedule::InverseSqrt(1.0));
  ExpectNear(s.current, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
  EXPECT_EQ(s.round, 0u);
  EXPECT_EQ(s.cumulative_loss, std::vector<double>(3, 0.0));
  EXPECT_EQ(KindOf([] { LearnerInit(LearnerKind::kMwu, 0, RateSchedule::Constant(1.0)); }),
            ErrorKind::kBadDimension);
  EXPECT_EQ(KindOf([] { RateSchedule::Constant(0.0); }), ErrorKind::kInvalidArgument);
}

TEST(LearnerStepTest, MwuExample) {
  LearnerState s = LearnerInit(LearnerKind::kMwu, 2, RateSchedule::Constant(std::log(2.0)));
  const std::vector<double> loss{1.0, 0.0};
  s = LearnerStep(s, loss);
  // Weights 0.5 e^{-ln 2} and 0.5, normalized.
  const double w0 = 0.5 * std::exp(-std::log(2.0)), w1 = 0.5;
  ExpectNear(s.current, {w0 / (w0 + w1), w1 / (w0 + w1)}, 1e-15);
  ExpectNear(s.current, {1.0 / 3, 2.0 / 3}, 1e-15);
  EXPECT_EQ(s.round, 1u);
}

TEST(LearnerStepTest, EuclideanExample) {
  LearnerState s = LearnerInit(LearnerKind::kFtrlEuclidean, 2, RateSchedule::Constant(1.0));
  // Unconstrained argmin -eta L = [1.2, 0.2].
  const std::vector<double> loss{-1.2, -0.2};
  s = LearnerStep(s, loss);
  ExpectNear(s.current, {1.0, 0.0}, 0.0);
}

TEST(LearnerStepTest, Errors) {
  const LearnerState s = LearnerInit(LearnerKind::kMwu, 2, RateSchedule::Constant(1.0));
  const std::vector<double> three{1.0, 2.0, 3.0};
  EXPECT_EQ(KindOf([&] { LearnerStep(s, three); }), ErrorKind::kDimensionMismatch);
  const std::vector<double> bad{1.0, std::nan("")};
  EXPECT_EQ(KindOf([&] { LearnerStep(s, bad); }), ErrorKind::kNonFiniteLoss);
  const std::vector<double> inf{1.0, INFINITY};
  EXPECT_EQ(KindOf([&] { LearnerStep(s, inf); }), ErrorKind::kNonFiniteLoss);
}

TEST(LearnerStepTest, MwuAndEntropicFtrlCoincide) {
  std::mt19937_64 rng(3);
  LearnerState a = LearnerInit(LearnerKind::kMwu, 4, RateSchedule::InverseSqrt(0.7));
  LearnerState b = LearnerInit(LearnerKind::kFtrlEntropy, 4, RateSchedule::InverseSqrt(0.7));
  for (int t = 0; t < 100; ++t) {
    const std::vector<double> loss = testing::RandomLosses(rng, 4);
    a = LearnerStep(a, loss);
    b = LearnerStep(b, loss);
    EXPECT_EQ(a.current, b.current);
  }
}

class LearnerProperty : public ::testing::TestWithParam<LearnerKind> {
 protected:
  std::mt19937_64 rng{11};
};

TEST_P(LearnerProperty, ConstantLossLeavesIterateUnchanged) {
  for (RateSchedule schedule : {RateSchedule::Constant(0.8), RateSchedule::InverseSqrt(1.3)}) {
    LearnerState s = LearnerInit(GetParam(), 3, schedule);
    const std::vector<double> flat(3, 0.75);
    s = LearnerStep(s, flat);
    EXPECT_EQ(s.current, Strategy::Uniform(3));
    // From a non-uniform state, constant steps with a constant rate.
    LearnerState t = LearnerInit(GetParam(), 3, RateSchedule::Constant(0.8));
    t = LearnerStep(t, testing::RandomLosses(rng, 3));
    for (int i = 0; i < 20; ++i) {
      const Strategy before = t.current;
      t = LearnerStep(t, std::vector<double>(3, 0.25 * i));
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(t.current[j], before[j], 1e-14);
    }
  }
}

TEST_P(LearnerProperty, IteratesStayOnTheSimplexAndLossesAccumulate) {
  LearnerState s = LearnerInit(GetParam(), 5, DefaultSchedule(GetParam(), 5));
  std::vector<double> total(5, 0.0);
  for (int t = 0; t < 500; ++t) {
    // Multiples of 1/8 keep the running sums exact in binary.
    std::vector<double> loss(5);
    for (double& x : loss) x = std::uniform_int_distribution<int>(0, 8)(rng) / 8.0;
    for (std::size_t i = 0; i < 5; ++i) total[i] += loss[i];
    s = LearnerStep(s, loss);
    EXPECT_NO_THROW(Strategy::Make(s.current.weights()));
  }
  EXPECT_EQ(s.cumulative_loss, total);
  EXPECT_EQ(s.round, 500u);
}

TEST_P(LearnerProperty, StableOnDesignedGames) {
  const QStrategy half = QStrategy::Make({Rational(1, 2), Rational(1, 2)});
  const DesignedGame eq = Design(half, half, Rational(1), {ParseRational("0.4")});
  StabilityReport r =
      StabilityProbe(GetParam(), RateSchedule::Constant(1.0), ToDouble(eq.matrix),
                     ToDouble(eq.y_star), 100);
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.max_drift, 0.0);

  const QStrategy x3 = QStrategy::Make({Rational(1, 2), Rational(1, 2), Rational(0)});
  const QStrategy y3 = QStrategy::Make({Rational(2, 5), Rational(2, 5), Rational(1, 5)});
  const DesignedGame larger = Design(x3, y3, Rational(1));
  r = StabilityProbe(GetParam(), DefaultSchedule(GetParam(), 3), ToDouble(larger.matrix),
                     ToDouble(larger.y_star), 100);
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.max_drift, 0.0);

  const DesignedGame single = DesignSingleton(QStrategy::Pure(2, 0), Rational(1), Rational(1, 2));
  r = StabilityProbe(GetParam(), RateSchedule::Constant(1.0), ToDouble(single.matrix),
                     ToDouble(single.y_star), 100);
  EXPECT_FALSE(r.stable);
  EXPECT_GT(r.max_drift, 0.0);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, LearnerProperty, ::testing::ValuesIn(kAllKinds),
                         [](const auto& info) {
                           std::string name(LearnerKindName(info.param));
                           std::erase(name, '-');
                           return name;
                         });

TEST(ProjectSimplexTest, Examples) {
  ExpectNear(ProjectSimplex(std::vector<double>{0.2, 0.3, 0.5}), {0.2, 0.3, 0.5}, 1e-15);
  ExpectNear(ProjectSimplex(std::vector<double>{1.2, 0.2}), {1.0, 0.0}, 1e-15);
  ExpectNear(ProjectSimplex(std::vector<double>{-5.0, -5.0}), {0.5, 0.5}, 0.0);
  EXPECT_EQ(KindOf([] { ProjectSimplex(std::vector<double>{1.0, NAN}); }),
            ErrorKind::kNonFiniteInput);
}

TEST(ProjectSimplexTest, MatchesGridSearch) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 3;
    std::vector<double> p(dim);
    for (double& x : p) x = u(rng);
    const Strategy got = ProjectSimplex(p);
    const std::vector<double> want = testing::GridProject(p);
    // The grid only resolves the minimizer to about sqrt(machine eps), but
    // its objective value is sharp; the projection must be at least as good.
    double got_cost = 0.0, want_cost = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      got_cost += (got[i] - p[i]) * (got[i] - p[i]);
      want_cost += (want[i] - p[i]) * (want[i] - p[i]);
    }
    EXPECT_LE(got_cost, want_cost + 1e-14);
    ExpectNear(got, want, 1e-6);
  }
}

TEST(StabilityProbeTest, NeedsTwoRounds) {
  EXPECT_THROW(StabilityProbe(LearnerKind::kMwu, RateSchedule::Constant(1.0),
                              Matrix(1, 1, 1.0), Strategy::Uniform(1), 1),
               Error);
}

TEST(DefaultScheduleTest, Rates) {
  EXPECT_DOUBLE_EQ(DefaultSchedule(LearnerKind::kMwu, 4).At(9), std::sqrt(std::log(4.0) / 9));
  EXPECT_DOUBLE_EQ(DefaultSchedule(LearnerKind::kFtrlEuclidean, 4).At(4), 0.5);
}

// Average regret of MWU against random losses shrinks with T and sits under
// the usual envelope.
TEST(NoRegretTest, MwuAverageRegret) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 8u}) {
    double previous = INFINITY;
    for (std::size_t horizon : {100u, 10000u}) {
      LearnerState s = LearnerInit(LearnerKind::kMwu, n, DefaultSchedule(LearnerKind::kMwu, n));
      std::vector<double> totals(n, 0.0);
      double paid = 0.0;
      for (std::size_t t = 0; t < horizon; ++t) {
        const std::vector<double> loss = testing::RandomLosses(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
          paid += s.current[i] * loss[i];
          totals[i] += loss[i];
        }
        s = LearnerStep(s, loss);
      }
      const double avg = (paid - *std::min_element(totals.begin(), totals.end())) / horizon;
      EXPECT_LE(avg, 2.0 * std::sqrt(std::log(double(n)) / horizon) + 0.01);
      EXPECT_LT(avg, previous);
      previous = avg;
    }
  }
}

}  // namespace
}  // namespace mmd
