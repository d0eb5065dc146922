#include <gtest/gtest.h>

#include <vector>

#include "autodime/error.h"
#include "autodime/random.h"
#include "autodime/student/gae.h"
#include "oracles.h"

namespace autodime::student {
namespace {

std::vector<double> RandomValues(int n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = 4.0 * UniformDouble(rng) - 2.0;
  return v;
}

TEST(GaeTest, ZeroRewardsAndValuesGiveZero) {
  const std::vector<double> zeros(8, 0.0);
  const GaeResult out = ComputeGae(zeros, zeros, 0.0, {});
  for (int t = 0; t < 8; ++t) {
    EXPECT_EQ(out.advantages[t], 0.0);
    EXPECT_EQ(out.targets[t], 0.0);
  }
}

TEST(GaeTest, SingleTerminalStep) {
  const std::vector<double> rewards = {1.0};
  const std::vector<double> values = {0.5};
  const GaeResult out = ComputeGae(rewards, values, 0.0, {});
  EXPECT_DOUBLE_EQ(out.advantages[0], 0.5);
  EXPECT_DOUBLE_EQ(out.targets[0], 1.0);
}

TEST(GaeTest, EmptyEpisode) {
  const GaeResult out = ComputeGae({}, {}, 0.0, {});
  EXPECT_TRUE(out.advantages.empty());
  EXPECT_TRUE(out.targets.empty());
}

TEST(GaeTest, LengthMismatchIsRejected) {
  const std::vector<double> rewards = {1.0, 2.0};
  const std::vector<double> values = {0.5};
  EXPECT_THROW(ComputeGae(rewards, values, 0.0, {}), ContractViolation);
}

TEST(GaeTest, InvalidDiscountIsRejected) {
  const std::vector<double> r = {1.0};
  EXPECT_THROW(ComputeGae(r, r, 0.0, {.gamma = 1.5, .lambda = 0.9}), ContractViolation);
  EXPECT_THROW(ComputeGae(r, r, 0.0, {.gamma = 0.9, .lambda = -0.1}), ContractViolation);
}

TEST(GaeTest, MatchesDefinitionalSumOnRandomEpisodes) {
  Rng rng(2021);
  double worst = 0.0;
  for (int episode = 0; episode < 1000; ++episode) {
    const int length = 1 + static_cast<int>(UniformIndex(rng, 20));
    const GaeConfig config{.gamma = 0.5 + 0.5 * UniformDouble(rng),
                           .lambda = UniformDouble(rng)};
    const std::vector<double> rewards = RandomValues(length, rng);
    const std::vector<double> values = RandomValues(length, rng);
    const double bootstrap = 4.0 * UniformDouble(rng) - 2.0;
    const GaeResult out = ComputeGae(rewards, values, bootstrap, config);
    const std::vector<double> expected = testing::DefinitionalAdvantages(
        rewards, values, bootstrap, config.gamma, config.lambda);
    for (int t = 0; t < length; ++t) {
      worst = std::max(worst, std::abs(out.advantages[t] - expected[t]));
      EXPECT_DOUBLE_EQ(out.targets[t], out.advantages[t] + values[t]);
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(GaeTest, TenStepEpisodeMatchesOracleTightly) {
  Rng rng(10);
  const std::vector<double> rewards = RandomValues(10, rng);
  const std::vector<double> values = RandomValues(10, rng);
  const GaeResult out = ComputeGae(rewards, values, 0.0, {.gamma = 0.97, .lambda = 0.9});
  const auto expected = testing::DefinitionalAdvantages(rewards, values, 0.0, 0.97, 0.9);
  for (int t = 0; t < 10; ++t) EXPECT_NEAR(out.advantages[t], expected[t], 1e-12);
}

TEST(GaeTest, LambdaOneGivesMonteCarloReturns) {
  Rng rng(11);
  for (int episode = 0; episode < 100; ++episode) {
    const int length = 1 + static_cast<int>(UniformIndex(rng, 20));
    const std::vector<double> rewards = RandomValues(length, rng);
    const std::vector<double> values = RandomValues(length, rng);
    const double gamma = 0.9;
    const GaeResult out = ComputeGae(rewards, values, 0.0, {.gamma = gamma, .lambda = 1.0});
    for (int t = 0; t < length; ++t) {
      double ret = 0.0;
      double discount = 1.0;
      for (int k = t; k < length; ++k) {
        ret += discount * rewards[k];
        discount *= gamma;
      }
      EXPECT_NEAR(out.targets[t], ret, 1e-10);
    }
  }
}

TEST(GaeTest, LambdaZeroGivesOneStepTdError) {
  Rng rng(12);
  for (int episode = 0; episode < 100; ++episode) {
    const int length = 1 + static_cast<int>(UniformIndex(rng, 20));
    const std::vector<double> rewards = RandomValues(length, rng);
    const std::vector<double> values = RandomValues(length, rng);
    const double bootstrap = UniformDouble(rng);
    const double gamma = 0.95;
    const GaeResult out = ComputeGae(rewards, values, bootstrap, {.gamma = gamma, .lambda = 0.0});
    for (int t = 0; t < length; ++t) {
      const double next = t + 1 < length ? values[t + 1] : bootstrap;
      EXPECT_EQ(out.advantages[t], rewards[t] + gamma * next - values[t]);
    }
  }
}

}  // namespace
}  // namespace autodime::student
