#ifndef AUTODIME_MAZE_TEXT_FORMAT_H_
#define AUTODIME_MAZE_TEXT_FORMAT_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "autodime/maze/env.h"
#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"

namespace autodime::maze {

// One-line maze encoding:
//
//   <H>x<W> walls <edge> <edge> ... spawn <r>,<c> <r>,<c> <r>,<c>
//
// An edge token is `e<r>,<c>` (wall east of cell r,c) or `s<r>,<c>` (wall
// south of cell r,c). Edges are listed east-walls first, then south-walls, in
// row-major order; the spawn cells are agent, box, ramp. Parsing followed by
// formatting reproduces the input byte for byte.
std::string FormatMaze(const MazeLayout& layout, const SpawnSpec& spawn);
// Throws std::runtime_error on malformed text.
std::pair<MazeLayout, SpawnSpec> ParseMaze(const std::string& line);

// Replay file: the maze line, then a line with the episode parameters and a
// line with the action tokens.
//
//   maze <maze line>
//   episode length=<L> stochastic=<0|1> flag=<0|1>
//   actions <token> <token> ...
struct Replay {
  MazeLayout layout;
  SpawnSpec spawn;
  EnvConfig env;
  bool reward_flag = true;
  std::vector<Action> actions;
};

void WriteReplay(std::ostream& out, const Replay& replay);
Replay ReadReplay(std::istream& in);

// ASCII rendering: `A` agent, `B` box, `R` ramp (`a` when carried), `|` and
// `-` walls.
std::string RenderAscii(const MazeLayout& layout, const EnvState& state);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_TEXT_FORMAT_H_
