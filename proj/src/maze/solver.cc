#include "autodime/maze/solver.h"

#include <algorithm>
#include <deque>

namespace autodime::maze {
namespace {

struct Node {
  int agent;
  int ramp;
  bool carrying;
};

int Key(const Node& n, int cells) { return (n.agent * cells + n.ramp) * 2 + n.carrying; }

}  // namespace

std::optional<std::vector<Action>> PlanToReward(const MazeLayout& layout,
                                                const EnvState& state) {
  if (ProximityReward(layout, state.agent, state.box) > 0.0) {
    return std::vector<Action>{};
  }
  const int cells = layout.cell_count();
  const EnvConfig probe{.episode_length = 1, .stochastic_reward = false};
  std::vector<int> parent(static_cast<std::size_t>(cells) * cells * 2, -2);
  std::vector<Action> via(parent.size(), Action::kStay);
  std::deque<Node> frontier;
  const Node start{layout.Index(state.agent), layout.Index(state.ramp), state.carrying_ramp};
  parent[Key(start, cells)] = -1;
  frontier.push_back(start);
  while (!frontier.empty()) {
    const Node node = frontier.front();
    frontier.pop_front();
    EnvState s = state;
    s.agent = layout.CellAt(node.agent);
    s.ramp = layout.CellAt(node.ramp);
    s.carrying_ramp = node.carrying;
    s.t = 0;
    for (int a = 0; a < kNumActions; ++a) {
      const EnvState next = Step(s, layout, static_cast<Action>(a), probe).state;
      const Node child{layout.Index(next.agent), layout.Index(next.ramp), next.carrying_ramp};
      const int key = Key(child, cells);
      if (parent[key] != -2) continue;
      parent[key] = Key(node, cells);
      via[key] = static_cast<Action>(a);
      if (ProximityReward(layout, next.agent, next.box) > 0.0) {
        std::vector<Action> plan;
        for (int k = key; parent[k] != -1; k = parent[k]) plan.push_back(via[k]);
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
      frontier.push_back(child);
    }
  }
  return std::nullopt;
}

int OptimalReturn(const MazeLayout& layout, const SpawnSpec& spawn, int episode_length) {
  const auto plan = PlanToReward(layout, InitialState(spawn));
  if (!plan) return 0;
  return std::max(0, episode_length - static_cast<int>(plan->size()));
}

Action ShortestPathAction(const MazeLayout& layout, const EnvState& state) {
  const auto plan = PlanToReward(layout, state);
  if (!plan || plan->empty()) return Action::kStay;
  return plan->front();
}

}  // namespace autodime::maze
