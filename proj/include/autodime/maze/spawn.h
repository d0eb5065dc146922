#ifndef AUTODIME_MAZE_SPAWN_H_
#define AUTODIME_MAZE_SPAWN_H_

#include <cstdint>
#include <string_view>

#include "autodime/maze/layout.h"
#include "autodime/random.h"

namespace autodime::maze {

// Teacher-controlled part of an environment: where the agent, the box and the
// ramp start. The three cells are pairwise distinct.
struct SpawnSpec {
  Cell agent;
  Cell box;
  Cell ramp;
  bool operator==(const SpawnSpec&) const = default;
};

bool IsValidSpawn(const MazeLayout& layout, const SpawnSpec& spawn);

// Three distinct cells drawn uniformly without replacement.
SpawnSpec UniformSpawn(Rng& rng, const MazeLayout& layout);
SpawnSpec UniformSpawn(std::uint64_t seed, const MazeLayout& layout);

enum class Difficulty { kEasy, kHard, kImpossible };
inline constexpr int kNumDifficulties = 3;

std::string_view DifficultyName(Difficulty d);

// Easy: agent shares the box's room. Hard: agent shares the ramp's room but
// not the box's. Impossible: everything else.
Difficulty ClassifyDifficulty(const MazeLayout& layout, const SpawnSpec& spawn);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_SPAWN_H_
