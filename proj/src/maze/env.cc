#include "autodime/maze/env.h"

#include <array>

#include "autodime/error.h"

namespace autodime::maze {
namespace {

constexpr std::array<std::string_view, kNumActions> kActionTokens = {
    "U", "D", "L", "R", "P", "X", "CU", "CD", "CL", "CR", "S"};

double Normalize(int index, int size) {
  return 2.0 * (index + 0.5) / size - 1.0;
}

}  // namespace

std::string_view ActionToken(Action action) {
  return kActionTokens[static_cast<int>(action)];
}

std::optional<Action> ParseActionToken(std::string_view token) {
  for (int i = 0; i < kNumActions; ++i) {
    if (kActionTokens[i] == token) return static_cast<Action>(i);
  }
  return std::nullopt;
}

EnvState InitialState(const SpawnSpec& spawn, bool reward_flag) {
  EnvState state;
  state.agent = spawn.agent;
  state.box = spawn.box;
  state.ramp = spawn.ramp;
  state.reward_flag = reward_flag;
  return state;
}

EnvState ResetEnv(const SpawnSpec& spawn, const EnvConfig& config, Rng& rng) {
  const bool flag = config.stochastic_reward ? Bernoulli(rng, 0.5) : true;
  return InitialState(spawn, flag);
}

double ProximityReward(const MazeLayout& layout, Cell agent, Cell box) {
  if (ChebyshevDistance(agent, box) > 1) return 0.0;
  return layout.RoomOf(agent) == layout.RoomOf(box) ? 1.0 : 0.0;
}

double StochasticReward(double raw_reward, bool reward_flag) {
  return reward_flag ? 2.0 * raw_reward : 0.0;
}

StepResult Step(const EnvState& state, const MazeLayout& layout, Action action,
                const EnvConfig& config) {
  Require(state.t >= 0 && state.t < config.episode_length,
          "step called after the episode ended");
  double reward = ProximityReward(layout, state.agent, state.box);
  if (config.stochastic_reward) reward = StochasticReward(reward, state.reward_flag);

  EnvState next = state;
  next.t = state.t + 1;
  auto move = [&](Direction dir) {
    if (!layout.HasWall(state.agent, dir)) next.agent = Neighbor(state.agent, dir);
  };
  auto climb = [&](Direction dir) {
    if (!state.carrying_ramp || !layout.HasInteriorWall(state.agent, dir)) return;
    next.ramp = state.agent;
    next.carrying_ramp = false;
    next.agent = Neighbor(state.agent, dir);
  };
  switch (action) {
    case Action::kUp:
      move(Direction::kUp);
      break;
    case Action::kDown:
      move(Direction::kDown);
      break;
    case Action::kLeft:
      move(Direction::kLeft);
      break;
    case Action::kRight:
      move(Direction::kRight);
      break;
    case Action::kPickUp:
      if (state.agent == state.ramp) next.carrying_ramp = true;
      break;
    case Action::kDrop:
      next.carrying_ramp = false;
      break;
    case Action::kClimbUp:
      climb(Direction::kUp);
      break;
    case Action::kClimbDown:
      climb(Direction::kDown);
      break;
    case Action::kClimbLeft:
      climb(Direction::kLeft);
      break;
    case Action::kClimbRight:
      climb(Direction::kRight);
      break;
    case Action::kStay:
      break;
  }
  if (next.carrying_ramp) next.ramp = next.agent;
  return {next, reward};
}

Eigen::VectorXd Observe(const EnvState& state, const MazeLayout& layout,
                        const EnvConfig& config) {
  Eigen::VectorXd obs(kObservationDim);
  const int h = layout.height();
  const int w = layout.width();
  obs << Normalize(state.agent.row, h), Normalize(state.agent.col, w),
      Normalize(state.box.row, h), Normalize(state.box.col, w),
      Normalize(state.ramp.row, h), Normalize(state.ramp.col, w),
      state.carrying_ramp ? 1.0 : 0.0,
      static_cast<double>(state.t) / config.episode_length,
      layout.HasWall(state.agent, Direction::kUp) ? 1.0 : 0.0,
      layout.HasWall(state.agent, Direction::kDown) ? 1.0 : 0.0,
      layout.HasWall(state.agent, Direction::kLeft) ? 1.0 : 0.0,
      layout.HasWall(state.agent, Direction::kRight) ? 1.0 : 0.0;
  return obs;
}

}  // namespace autodime::maze
