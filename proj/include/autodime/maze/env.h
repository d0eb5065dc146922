#ifndef AUTODIME_MAZE_ENV_H_
#define AUTODIME_MAZE_ENV_H_

#include <Eigen/Dense>
#include <optional>
#include <string_view>

#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"
#include "autodime/random.h"

namespace autodime::maze {

enum class Action {
  kUp,
  kDown,
  kLeft,
  kRight,
  kPickUp,
  kDrop,
  kClimbUp,
  kClimbDown,
  kClimbLeft,
  kClimbRight,
  kStay,
};
inline constexpr int kNumActions = 11;

std::string_view ActionToken(Action action);
std::optional<Action> ParseActionToken(std::string_view token);

struct EnvConfig {
  int episode_length = 64;
  // Each episode is rewarded with probability 1/2, at double the rate.
  bool stochastic_reward = false;
};

struct EnvState {
  Cell agent;
  Cell box;
  Cell ramp;
  bool carrying_ramp = false;
  int t = 0;
  // Drawn once per episode; only consulted when stochastic_reward is set.
  bool reward_flag = true;
  bool operator==(const EnvState&) const = default;
};

EnvState InitialState(const SpawnSpec& spawn, bool reward_flag = true);
// Draws the episode's reward flag from `rng` when the variant is stochastic.
EnvState ResetEnv(const SpawnSpec& spawn, const EnvConfig& config, Rng& rng);

struct StepResult {
  EnvState state;
  double reward = 0.0;
};

// 1 when the agent is within Chebyshev distance 1 of the box and in the same
// room; adjacency across a wall never counts.
double ProximityReward(const MazeLayout& layout, Cell agent, Cell box);

// Rewarded episodes (flag set) pay double, unrewarded episodes pay nothing.
double StochasticReward(double raw_reward, bool reward_flag);

// Advances one step. The reward is the proximity reward of the state the
// action is taken in, so an agent spawned next to the box collects L per
// episode. Throws ContractViolation once t reaches the episode length.
StepResult Step(const EnvState& state, const MazeLayout& layout, Action action,
                const EnvConfig& config);

// Student observation layout:
//   [0..5]  agent, box, ramp (row, col), each mapped to (-1, 1)
//   [6]     carrying flag
//   [7]     t / episode_length
//   [8..11] wall up, down, left, right of the agent's cell
inline constexpr int kObservationDim = 12;
Eigen::VectorXd Observe(const EnvState& state, const MazeLayout& layout,
                        const EnvConfig& config);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_ENV_H_
