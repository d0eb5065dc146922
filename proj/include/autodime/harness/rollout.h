#ifndef AUTODIME_HARNESS_ROLLOUT_H_
#define AUTODIME_HARNESS_ROLLOUT_H_

#include <vector>

#include "autodime/maze/env.h"
#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"
#include "autodime/random.h"
#include "autodime/student/student.h"
#include "autodime/student/trajectory.h"

namespace autodime::harness {

struct Episode {
  maze::MazeLayout layout;
  maze::SpawnSpec spawn;
};

struct RolloutOptions {
  bool greedy = false;
  // Pay the deterministic proximity reward even in the stochastic variant
  // (used for evaluation, where the expected reward is what matters).
  bool expected_reward = false;
};

// Steps every episode in lockstep for the full episode length, sampling
// actions from pi1 and recording both ensemble value predictions.
std::vector<student::Trajectory> Rollout(const student::Student& student,
                                         const std::vector<Episode>& episodes,
                                         const maze::EnvConfig& env, Rng& rng,
                                         const RolloutOptions& options = {});

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_ROLLOUT_H_
