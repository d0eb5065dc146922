#include "autodime/maze/spawn.h"

#include "autodime/error.h"

namespace autodime::maze {

bool IsValidSpawn(const MazeLayout& layout, const SpawnSpec& spawn) {
  return layout.InBounds(spawn.agent) && layout.InBounds(spawn.box) &&
         layout.InBounds(spawn.ramp) && spawn.agent != spawn.box &&
         spawn.agent != spawn.ramp && spawn.box != spawn.ramp;
}

SpawnSpec UniformSpawn(Rng& rng, const MazeLayout& layout) {
  const auto n = static_cast<std::uint64_t>(layout.cell_count());
  Require(n >= 3, "spawning needs at least three cells");
  const auto a = UniformIndex(rng, n);
  auto b = UniformIndex(rng, n - 1);
  if (b >= a) ++b;
  auto c = UniformIndex(rng, n - 2);
  // Skip over the two taken indices in increasing order.
  const auto lo = std::min(a, b);
  const auto hi = std::max(a, b);
  if (c >= lo) ++c;
  if (c >= hi) ++c;
  return {layout.CellAt(static_cast<int>(a)), layout.CellAt(static_cast<int>(b)),
          layout.CellAt(static_cast<int>(c))};
}

SpawnSpec UniformSpawn(std::uint64_t seed, const MazeLayout& layout) {
  Rng rng(seed);
  return UniformSpawn(rng, layout);
}

std::string_view DifficultyName(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy:
      return "easy";
    case Difficulty::kHard:
      return "hard";
    case Difficulty::kImpossible:
      return "impossible";
  }
  return "?";
}

Difficulty ClassifyDifficulty(const MazeLayout& layout, const SpawnSpec& spawn) {
  const int agent_room = layout.RoomOf(spawn.agent);
  if (agent_room == layout.RoomOf(spawn.box)) return Difficulty::kEasy;
  if (agent_room == layout.RoomOf(spawn.ramp)) return Difficulty::kHard;
  return Difficulty::kImpossible;
}

}  // namespace autodime::maze
