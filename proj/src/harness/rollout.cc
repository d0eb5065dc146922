#include "autodime/harness/rollout.h"

#include "autodime/error.h"

namespace autodime::harness {

std::vector<student::Trajectory> Rollout(const student::Student& student,
                                         const std::vector<Episode>& episodes,
                                         const maze::EnvConfig& env, Rng& rng,
                                         const RolloutOptions& options) {
  Require(!episodes.empty(), "rollout needs at least one episode");
  const int n = static_cast<int>(episodes.size());
  const int length = env.episode_length;
  maze::EnvConfig step_env = env;
  if (options.expected_reward) step_env.stochastic_reward = false;

  std::vector<maze::EnvState> states;
  states.reserve(n);
  for (const Episode& e : episodes) states.push_back(maze::ResetEnv(e.spawn, env, rng));

  std::vector<student::Trajectory> out(n);
  for (auto& traj : out) {
    traj.observations.resize(maze::kObservationDim, length);
    traj.actions.reserve(length);
    traj.log_probs.reserve(length);
    traj.rewards.reserve(length);
    traj.values1.reserve(length);
    traj.values2.reserve(length);
  }

  Eigen::MatrixXd obs(maze::kObservationDim, n);
  for (int t = 0; t < length; ++t) {
    for (int i = 0; i < n; ++i) obs.col(i) = maze::Observe(states[i], episodes[i].layout, env);
    const student::ActBatch acts = student.Act(obs, rng, options.greedy);
    const Eigen::VectorXd v1 = student.Values1(obs);
    const Eigen::VectorXd v2 = student.Values2(obs);
    for (int i = 0; i < n; ++i) {
      student::Trajectory& traj = out[i];
      traj.observations.col(t) = obs.col(i);
      traj.actions.push_back(acts.actions[i]);
      traj.log_probs.push_back(acts.log_probs[i]);
      traj.values1.push_back(v1(i));
      traj.values2.push_back(v2(i));
      const maze::StepResult step = maze::Step(
          states[i], episodes[i].layout, static_cast<maze::Action>(acts.actions[i]), step_env);
      traj.rewards.push_back(step.reward);
      states[i] = step.state;
    }
  }
  return out;
}

}  // namespace autodime::harness
