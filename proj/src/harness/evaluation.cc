#include "autodime/harness/evaluation.h"

#include "autodime/error.h"
#include "autodime/maze/solver.h"

namespace autodime::harness {

DifficultyFrequencies SamplingProbabilities(std::span<const Episode> window) {
  Require(!window.empty(), "sampling probabilities need a non-empty window");
  int counts[maze::kNumDifficulties] = {0, 0, 0};
  for (const Episode& e : window) {
    ++counts[static_cast<int>(maze::ClassifyDifficulty(e.layout, e.spawn))];
  }
  const double n = static_cast<double>(window.size());
  return {counts[0] / n, counts[1] / n, counts[2] / n};
}

DifficultyFrequencies UniformSpawnProportions(std::uint64_t seed, int samples,
                                              const MazeSettings& settings) {
  Require(samples > 0, "need at least one sample");
  Rng rng(seed);
  long long counts[maze::kNumDifficulties] = {0, 0, 0};
  for (int i = 0; i < samples; ++i) {
    const maze::MazeLayout layout =
        maze::GenerateLayout(rng(), settings.height, settings.width, settings.rooms);
    const maze::SpawnSpec spawn = maze::UniformSpawn(rng, layout);
    ++counts[static_cast<int>(maze::ClassifyDifficulty(layout, spawn))];
  }
  const double n = samples;
  return {counts[0] / n, counts[1] / n, counts[2] / n};
}

std::vector<Episode> SampleHardEpisodes(std::uint64_t seed, int count,
                                        const MazeSettings& settings, std::int64_t max_draws) {
  Require(count >= 1, "need at least one evaluation episode");
  Rng rng(seed);
  std::vector<Episode> out;
  std::int64_t draws = 0;
  while (static_cast<int>(out.size()) < count) {
    Require(draws < max_draws, "rejection sampling found too few hard environments");
    ++draws;
    maze::MazeLayout layout =
        maze::GenerateLayout(rng(), settings.height, settings.width, settings.rooms);
    const maze::SpawnSpec spawn = maze::UniformSpawn(rng, layout);
    if (maze::ClassifyDifficulty(layout, spawn) == maze::Difficulty::kHard) {
      out.push_back({std::move(layout), spawn});
    }
  }
  return out;
}

double EvaluateOnEpisodes(const student::Student& student, const std::vector<Episode>& episodes,
                          const MazeSettings& settings) {
  Rng rng(0);
  const auto trajectories = Rollout(student, episodes, settings.env, rng,
                                    {.greedy = true, .expected_reward = true});
  double total = 0.0;
  for (const auto& traj : trajectories) total += traj.Return();
  return total / static_cast<double>(trajectories.size());
}

double EvaluateHard(const student::Student& student, std::uint64_t seed, int count,
                    const MazeSettings& settings) {
  return EvaluateOnEpisodes(student, SampleHardEpisodes(seed, count, settings), settings);
}

double EvaluateHardScripted(std::uint64_t seed, int count, const MazeSettings& settings) {
  maze::EnvConfig env = settings.env;
  env.stochastic_reward = false;
  double total = 0.0;
  const auto episodes = SampleHardEpisodes(seed, count, settings);
  for (const Episode& e : episodes) {
    // The dynamics are deterministic, so one plan from the start state stays valid.
    const std::vector<maze::Action> plan =
        maze::PlanToReward(e.layout, maze::InitialState(e.spawn)).value_or(std::vector<maze::Action>{});
    maze::EnvState state = maze::InitialState(e.spawn);
    for (int t = 0; t < env.episode_length; ++t) {
      const maze::Action action =
          t < static_cast<int>(plan.size()) ? plan[t] : maze::Action::kStay;
      const auto step = maze::Step(state, e.layout, action, env);
      total += step.reward;
      state = step.state;
    }
  }
  return total / static_cast<double>(episodes.size());
}

}  // namespace autodime::harness
