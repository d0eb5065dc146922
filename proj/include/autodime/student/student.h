#ifndef AUTODIME_STUDENT_STUDENT_H_
#define AUTODIME_STUDENT_STUDENT_H_

#include <Eigen/Dense>
#include <vector>

#include "autodime/nn/adam.h"
#include "autodime/nn/mlp.h"
#include "autodime/random.h"
#include "autodime/student/gae.h"
#include "autodime/student/losses.h"
#include "autodime/student/trajectory.h"

namespace autodime::student {

struct StudentConfig {
  int observation_dim = 12;
  int num_actions = 11;
  std::vector<int> hidden = {64, 64};
  double policy_learning_rate = 1e-3;
  double value_learning_rate = 1e-3;
  double clone_learning_rate = 1e-3;
  // Value networks predict return / value_scale.
  double value_scale = 10.0;
  // Initial scale of the policy output layer (near-uniform start).
  double policy_output_scale = 0.01;
  PpoConfig ppo;
  GaeConfig gae;
};

struct ActBatch {
  std::vector<int> actions;
  std::vector<double> log_probs;
};

struct StudentUpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double clone_kl = 0.0;
};

// The student bundle: policy pi1, value ensemble {V1, V2} trained on the
// same targets, and the behavioral-clone policy pi2 that only ever receives
// KL(pi1 || pi2) updates.
class Student {
 public:
  Student() = default;
  Student(const StudentConfig& config, Rng& rng);

  const StudentConfig& config() const { return config_; }
  StudentConfig& config() { return config_; }

  Eigen::MatrixXd PolicyLogits(const Eigen::MatrixXd& observations) const;
  Eigen::MatrixXd CloneLogits(const Eigen::MatrixXd& observations) const;
  Eigen::VectorXd Values1(const Eigen::MatrixXd& observations) const;
  Eigen::VectorXd Values2(const Eigen::MatrixXd& observations) const;

  // Samples one action per observation column (or takes the mode when
  // `greedy`), with the log-probability under pi1.
  ActBatch Act(const Eigen::MatrixXd& observations, Rng& rng, bool greedy = false) const;

  // Fills targets and advantages of each trajectory from values1, runs the
  // configured PPO epochs over shuffled episode minibatches, then one pass of
  // clone updates over the same observations. Throws on an empty batch.
  StudentUpdateStats Update(std::vector<Trajectory>& batch, Rng& rng);

  // One gradient step on mean KL(pi1 || pi2) over the observation columns,
  // touching pi2 only. Returns the KL before the step.
  double CloneUpdate(const Eigen::MatrixXd& observations);

  nn::Mlp& policy() { return policy_; }
  nn::Mlp& value1() { return value1_; }
  nn::Mlp& value2() { return value2_; }
  nn::Mlp& clone() { return clone_; }
  const nn::Mlp& policy() const { return policy_; }
  const nn::Mlp& value1() const { return value1_; }
  const nn::Mlp& value2() const { return value2_; }
  const nn::Mlp& clone() const { return clone_; }
  nn::AdamState& policy_optimizer() { return policy_opt_; }
  nn::AdamState& value1_optimizer() { return value1_opt_; }
  nn::AdamState& value2_optimizer() { return value2_opt_; }
  nn::AdamState& clone_optimizer() { return clone_opt_; }
  const nn::AdamState& policy_optimizer() const { return policy_opt_; }
  const nn::AdamState& value1_optimizer() const { return value1_opt_; }
  const nn::AdamState& value2_optimizer() const { return value2_opt_; }
  const nn::AdamState& clone_optimizer() const { return clone_opt_; }

 private:
  void MinibatchStep(const std::vector<const Trajectory*>& episodes,
                     const std::vector<std::vector<double>>& advantages,
                     const std::vector<int>& episode_ids, StudentUpdateStats& stats);
  void ValueStep(nn::Mlp& net, nn::AdamState& opt, const Eigen::MatrixXd& obs,
                 const Eigen::VectorXd& targets, double& loss);

  StudentConfig config_;
  nn::Mlp policy_;
  nn::Mlp value1_;
  nn::Mlp value2_;
  nn::Mlp clone_;
  nn::AdamState policy_opt_;
  nn::AdamState value1_opt_;
  nn::AdamState value2_opt_;
  nn::AdamState clone_opt_;
};

// Runs GAE on values1 and stores advantages/targets in the trajectory.
void FillTargets(Trajectory& trajectory, const GaeConfig& config);

}  // namespace autodime::student

#endif  // AUTODIME_STUDENT_STUDENT_H_
