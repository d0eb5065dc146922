#ifndef AUTODIME_MAZE_SOLVER_H_
#define AUTODIME_MAZE_SOLVER_H_

#include <optional>
#include <vector>

#include "autodime/maze/env.h"
#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"

namespace autodime::maze {

// Breadth-first search over (agent cell, ramp cell, carrying) for the
// shortest action sequence that brings the agent next to the box. Returns an
// empty plan when the agent is already rewarded and nullopt when no rewarded
// state is reachable.
std::optional<std::vector<Action>> PlanToReward(const MazeLayout& layout,
                                                const EnvState& state);

// Best achievable return with the deterministic reward: an agent that needs d
// steps to reach the box collects L - d (never negative).
int OptimalReturn(const MazeLayout& layout, const SpawnSpec& spawn, int episode_length);

// Scripted controller that follows a shortest plan and stays put once
// rewarded (or when nothing is reachable).
Action ShortestPathAction(const MazeLayout& layout, const EnvState& state);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_SOLVER_H_
