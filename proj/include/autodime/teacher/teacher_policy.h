#ifndef AUTODIME_TEACHER_TEACHER_POLICY_H_
#define AUTODIME_TEACHER_TEACHER_POLICY_H_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"
#include "autodime/nn/adam.h"
#include "autodime/nn/mlp.h"
#include "autodime/random.h"
#include "autodime/student/losses.h"

namespace autodime::teacher {

// Objects the teacher places, in placement order.
enum PlacedObject { kAgentObject, kBoxObject, kRampObject };
inline constexpr int kNumPlacedObjects = 3;

// Per-object allowed-cell masks (row-major cell index).
struct SpawnMask {
  std::array<std::vector<std::uint8_t>, kNumPlacedObjects> allowed;
  static SpawnMask AllowAll(int cells);
};

struct TeacherConfig {
  int height = 12;
  int width = 12;
  std::vector<int> hidden = {256, 256};
  std::vector<int> value_hidden = {64, 64};
  double learning_rate = 1e-3;
  double value_learning_rate = 1e-3;
  double policy_output_scale = 0.01;
  student::PpoConfig ppo = {.clip_epsilon = 0.2,
                            .entropy_coef = 0.01,
                            .epochs = 4,
                            .minibatch_episodes = 0,
                            .value_coef = 0.5,
                            .normalize_advantages = false};
  // Running mean/std normalization of raw teacher rewards.
  bool normalize_rewards = true;
};

struct TeacherAction {
  maze::SpawnSpec spawn;                        // after collision resolution
  std::array<int, kNumPlacedObjects> proposed;  // sampled cells, pre-resolution
  double log_prob = 0.0;                        // of the proposed cells
  double value = 0.0;
};

struct TeacherTransition {
  Eigen::VectorXd observation;
  SpawnMask mask;
  std::array<int, kNumPlacedObjects> proposed{};
  double log_prob = 0.0;
  double reward = 0.0;
  double value = 0.0;
};

struct TeacherUpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
};

// Returns `proposed` if it is free, otherwise the free cell nearest in
// Chebyshev distance, ties broken by row-major order. Throws when every cell
// is occupied.
maze::Cell ResolveCollision(maze::Cell proposed, std::span<const maze::Cell> occupied,
                            const maze::MazeLayout& layout);

// Maps the layout occupancy channels to a factorized distribution over the
// cells of the agent, the box and the ramp, plus a separate value network.
class TeacherPolicy {
 public:
  TeacherPolicy() = default;
  TeacherPolicy(const TeacherConfig& config, Rng& rng);

  const TeacherConfig& config() const { return config_; }
  int cells() const { return config_.height * config_.width; }
  int observation_dim() const { return 4 * cells(); }

  // Per-object log-probabilities over cells (masked cells get -inf).
  std::array<Eigen::VectorXd, kNumPlacedObjects> LogProbabilities(
      const Eigen::VectorXd& observation, const SpawnMask& mask) const;
  double Value(const Eigen::VectorXd& observation) const;

  // Samples each object's cell independently from its masked softmax, then
  // resolves collisions in placement order. Throws when an object has no
  // allowed cell.
  TeacherAction Act(const Eigen::VectorXd& observation, const maze::MazeLayout& layout,
                    const SpawnMask& mask, Rng& rng) const;

  // Single-step PPO: advantage = reward - V_T(Y), clipped surrogate plus
  // entropy bonus, value network regressed onto the reward.
  TeacherUpdateStats Update(std::vector<TeacherTransition> batch, Rng& rng);

  nn::Mlp& policy() { return policy_; }
  nn::Mlp& value() { return value_; }
  const nn::Mlp& policy() const { return policy_; }
  const nn::Mlp& value() const { return value_; }
  nn::AdamState& policy_optimizer() { return policy_opt_; }
  nn::AdamState& value_optimizer() { return value_opt_; }
  const nn::AdamState& policy_optimizer() const { return policy_opt_; }
  const nn::AdamState& value_optimizer() const { return value_opt_; }

 private:
  TeacherConfig config_;
  nn::Mlp policy_;
  nn::Mlp value_;
  nn::AdamState policy_opt_;
  nn::AdamState value_opt_;
  // Running reward statistics, used when normalize_rewards is set.
  double reward_mean_ = 0.0;
  double reward_m2_ = 0.0;
  std::int64_t reward_count_ = 0;
};

// Mean factorized entropy (sum over objects) of masked distributions.
double MaskedEntropy(const Eigen::VectorXd& logits, const std::vector<std::uint8_t>& allowed);

}  // namespace autodime::teacher

#endif  // AUTODIME_TEACHER_TEACHER_POLICY_H_
