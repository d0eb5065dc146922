#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "autodime/error.h"
#include "autodime/harness/rollout.h"
#include "autodime/maze/solver.h"
#include "autodime/random.h"
#include "autodime/student/categorical.h"
#include "autodime/student/student.h"
#include "autodime/student/trajectory.h"

namespace autodime::student {
namespace {

StudentConfig SmallConfig() {
  StudentConfig config;
  config.hidden = {16, 16};
  return config;
}

Trajectory RandomTrajectory(int length, Rng& rng) {
  Trajectory traj;
  traj.observations.resize(maze::kObservationDim, length);
  for (Eigen::Index i = 0; i < traj.observations.size(); ++i) {
    traj.observations(i) = 2.0 * UniformDouble(rng) - 1.0;
  }
  for (int t = 0; t < length; ++t) {
    traj.actions.push_back(static_cast<int>(UniformIndex(rng, maze::kNumActions)));
    traj.log_probs.push_back(-std::log(static_cast<double>(maze::kNumActions)));
    traj.rewards.push_back(UniformDouble(rng) < 0.3 ? 1.0 : 0.0);
    traj.values1.push_back(UniformDouble(rng));
    traj.values2.push_back(UniformDouble(rng));
  }
  return traj;
}

TEST(StudentTest, EnsembleMembersStartDifferent) {
  Rng rng(1);
  const Student student(SmallConfig(), rng);
  EXPECT_FALSE(student.value1() == student.value2());
  Rng obs_rng(2);
  const Trajectory traj = RandomTrajectory(8, obs_rng);
  const Eigen::VectorXd gap = student.Values1(traj.observations) - student.Values2(traj.observations);
  EXPECT_GT(gap.cwiseAbs().mean(), 0.0);
}

TEST(StudentTest, UpdateRejectsEmptyBatch) {
  Rng rng(1);
  Student student(SmallConfig(), rng);
  std::vector<Trajectory> empty;
  EXPECT_THROW(student.Update(empty, rng), ContractViolation);
}

TEST(StudentTest, UpdateRejectsMalformedTrajectory) {
  Rng rng(1);
  Student student(SmallConfig(), rng);
  std::vector<Trajectory> batch = {RandomTrajectory(4, rng)};
  batch[0].rewards.pop_back();
  EXPECT_THROW(student.Update(batch, rng), ContractViolation);
}

TEST(StudentTest, ZeroAdvantageWithoutEntropyLeavesPolicyUnchanged) {
  StudentConfig config = SmallConfig();
  config.ppo.entropy_coef = 0.0;
  config.gae = {.gamma = 1.0, .lambda = 1.0};
  Rng rng(3);
  Student student(config, rng);
  Trajectory traj = RandomTrajectory(6, rng);
  // Zero rewards and zero values make every advantage exactly zero.
  std::fill(traj.rewards.begin(), traj.rewards.end(), 0.0);
  std::fill(traj.values1.begin(), traj.values1.end(), 0.0);
  std::vector<Trajectory> batch = {traj};
  const nn::Mlp before = student.policy();
  student.Update(batch, rng);
  EXPECT_TRUE(student.policy() == before);
}

TEST(StudentTest, ZeroAdvantageWithEntropyRaisesEntropy) {
  StudentConfig config = SmallConfig();
  config.ppo.entropy_coef = 0.1;
  config.policy_output_scale = 1.0;
  config.gae = {.gamma = 1.0, .lambda = 1.0};
  Rng rng(4);
  Student student(config, rng);
  Trajectory traj = RandomTrajectory(16, rng);
  std::fill(traj.rewards.begin(), traj.rewards.end(), 0.0);
  std::fill(traj.values1.begin(), traj.values1.end(), 0.0);
  const double before = PolicyEntropy(student.PolicyLogits(traj.observations));
  std::vector<Trajectory> batch = {traj};
  student.Update(batch, rng);
  EXPECT_GT(PolicyEntropy(student.PolicyLogits(traj.observations)), before);
}

TEST(StudentTest, DuplicatedBatchGivesSameFullBatchUpdate) {
  StudentConfig config = SmallConfig();
  config.ppo.minibatch_episodes = 0;
  config.ppo.epochs = 2;
  Rng init_a(5);
  Rng init_b(5);
  Student a(config, init_a);
  Student b(config, init_b);
  Rng data(6);
  const Trajectory traj = RandomTrajectory(10, data);
  std::vector<Trajectory> single = {traj};
  std::vector<Trajectory> doubled = {traj, traj};
  Rng ra(7);
  Rng rb(7);
  a.Update(single, ra);
  b.Update(doubled, rb);
  const std::vector<double> pa = a.policy().Flatten();
  const std::vector<double> pb = b.policy().Flatten();
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_NEAR(pa[i], pb[i], 1e-12);
  const std::vector<double> va = a.value2().Flatten();
  const std::vector<double> vb = b.value2().Flatten();
  for (std::size_t i = 0; i < va.size(); ++i) EXPECT_NEAR(va[i], vb[i], 1e-12);
}

TEST(CloneTest, CopiedPolicyHasZeroKlAndStaysPut) {
  Rng rng(8);
  Student student(SmallConfig(), rng);
  student.clone() = student.policy();
  const Trajectory traj = RandomTrajectory(12, rng);
  const nn::Mlp before = student.clone();
  EXPECT_EQ(student.CloneUpdate(traj.observations), 0.0);
  EXPECT_TRUE(student.clone() == before);
}

TEST(CloneTest, KlDecreasesUnderRepeatedUpdates) {
  StudentConfig config = SmallConfig();
  config.clone_learning_rate = 1e-3;
  config.policy_output_scale = 1.0;
  Rng rng(9);
  Student student(config, rng);
  const Trajectory traj = RandomTrajectory(32, rng);
  double previous = student.CloneUpdate(traj.observations);
  for (int step = 0; step < 50; ++step) {
    const double kl = student.CloneUpdate(traj.observations);
    EXPECT_LE(kl, previous + 1e-9);
    previous = kl;
  }
}

TEST(CloneTest, CloneOnlyTouchesClone) {
  Rng rng(10);
  Student student(SmallConfig(), rng);
  const nn::Mlp policy = student.policy();
  const nn::Mlp value1 = student.value1();
  const Trajectory traj = RandomTrajectory(12, rng);
  student.CloneUpdate(traj.observations);
  EXPECT_TRUE(student.policy() == policy);
  EXPECT_TRUE(student.value1() == value1);
}

TEST(StudentTest, GreedyActTakesMode) {
  Rng rng(11);
  Student student(SmallConfig(), rng);
  const Trajectory traj = RandomTrajectory(5, rng);
  const ActBatch acts = student.Act(traj.observations, rng, true);
  const Eigen::MatrixXd logits = student.PolicyLogits(traj.observations);
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(acts.actions[j], ArgMax(logits.col(j)));
    EXPECT_LE(acts.log_probs[j], 0.0);
  }
}

TEST(StudentTest, LearnsSingleRoomMaze) {
  StudentConfig config;
  config.hidden = {32, 32};
  config.policy_learning_rate = 1e-3;
  config.value_learning_rate = 1e-3;
  config.value_scale = 4.0;
  Rng rng(12);
  Student student(config, rng);
  const maze::MazeLayout layout(4, 4);
  const maze::EnvConfig env{.episode_length = 16};
  std::vector<harness::Episode> eval;
  double optimum = 0.0;
  for (int i = 0; i < 100; ++i) {
    eval.push_back({layout, maze::UniformSpawn(rng, layout)});
    optimum += maze::OptimalReturn(layout, eval.back().spawn, env.episode_length) / 100.0;
  }
  for (int iteration = 0; iteration < 200; ++iteration) {
    std::vector<harness::Episode> episodes;
    for (int i = 0; i < 16; ++i) episodes.push_back({layout, maze::UniformSpawn(rng, layout)});
    std::vector<Trajectory> batch = harness::Rollout(student, episodes, env, rng);
    student.Update(batch, rng);
  }
  std::vector<Trajectory> result = harness::Rollout(student, eval, env, rng, {.greedy = true});
  double mean = 0.0;
  for (const auto& traj : result) mean += traj.Return() / 100.0;
  EXPECT_GE(mean, 0.9 * optimum);
}

TEST(TrajectoryTest, ValidateChecksLogProbs) {
  Rng rng(13);
  Trajectory traj = RandomTrajectory(3, rng);
  EXPECT_NO_THROW(traj.Validate());
  traj.log_probs[1] = 0.5;
  EXPECT_THROW(traj.Validate(), ContractViolation);
  traj.log_probs[1] = std::nan("");
  EXPECT_THROW(traj.Validate(), ContractViolation);
}

TEST(TrajectoryTest, TextRoundTripIsExact) {
  Rng rng(14);
  Trajectory traj = RandomTrajectory(7, rng);
  FillTargets(traj, {});
  std::stringstream stream;
  WriteTrajectory(stream, traj);
  const Trajectory back = ReadTrajectory(stream);
  EXPECT_EQ(back.observations, traj.observations);
  EXPECT_EQ(back.actions, traj.actions);
  EXPECT_EQ(back.log_probs, traj.log_probs);
  EXPECT_EQ(back.rewards, traj.rewards);
  EXPECT_EQ(back.values1, traj.values1);
  EXPECT_EQ(back.values2, traj.values2);
  EXPECT_EQ(back.targets, traj.targets);
  EXPECT_EQ(back.advantages, traj.advantages);
}

TEST(TrajectoryTest, ReadRejectsTruncatedInput) {
  std::stringstream stream("trajectory v1 length=2 obs_dim=1\n0 -1 0 0 0 nan nan 0.5\n");
  EXPECT_ANY_THROW(ReadTrajectory(stream));
}

}  // namespace
}  // namespace autodime::student
