#include "autodime/maze/text_format.h"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "autodime/error.h"

namespace autodime::maze {
namespace {

std::string CellToken(Cell cell) {
  return std::to_string(cell.row) + "," + std::to_string(cell.col);
}

Cell ParseCell(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) throw std::runtime_error("bad cell '" + token + "'");
  try {
    std::size_t used_r = 0;
    std::size_t used_c = 0;
    const std::string row = token.substr(0, comma);
    const std::string col = token.substr(comma + 1);
    Cell cell{std::stoi(row, &used_r), std::stoi(col, &used_c)};
    if (used_r != row.size() || used_c != col.size()) throw std::invalid_argument(token);
    return cell;
  } catch (const std::logic_error&) {
    throw std::runtime_error("bad cell '" + token + "'");
  }
}

}  // namespace

std::string FormatMaze(const MazeLayout& layout, const SpawnSpec& spawn) {
  std::ostringstream out;
  const int h = layout.height();
  const int w = layout.width();
  out << h << 'x' << w << " walls";
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c + 1 < w; ++c) {
      if (layout.east_walls()[r * (w - 1) + c]) out << " e" << CellToken({r, c});
    }
  }
  for (int r = 0; r + 1 < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (layout.south_walls()[r * w + c]) out << " s" << CellToken({r, c});
    }
  }
  out << " spawn " << CellToken(spawn.agent) << ' ' << CellToken(spawn.box) << ' '
      << CellToken(spawn.ramp);
  return out.str();
}

std::pair<MazeLayout, SpawnSpec> ParseMaze(const std::string& line) {
  std::istringstream in(line);
  std::string dims;
  std::string tag;
  if (!(in >> dims >> tag) || tag != "walls") {
    throw std::runtime_error("maze line must start with '<H>x<W> walls'");
  }
  const auto x = dims.find('x');
  if (x == std::string::npos) throw std::runtime_error("bad maze dimensions");
  const Cell hw = ParseCell(dims.substr(0, x) + "," + dims.substr(x + 1));
  const int h = hw.row;
  const int w = hw.col;
  if (h <= 0 || w <= 0 || h > 1024 || w > 1024) {
    throw std::runtime_error("maze dimensions out of range");
  }
  std::vector<std::uint8_t> east(h * (w - 1), 0);
  std::vector<std::uint8_t> south((h - 1) * w, 0);
  std::string token;
  bool saw_spawn = false;
  while (in >> token) {
    if (token == "spawn") {
      saw_spawn = true;
      break;
    }
    if (token.size() < 2 || (token[0] != 'e' && token[0] != 's')) {
      throw std::runtime_error("bad wall token '" + token + "'");
    }
    const Cell cell = ParseCell(token.substr(1));
    if (token[0] == 'e') {
      if (cell.row < 0 || cell.row >= h || cell.col < 0 || cell.col + 1 >= w) {
        throw std::runtime_error("east wall out of range: " + token);
      }
      east[cell.row * (w - 1) + cell.col] = 1;
    } else {
      if (cell.row < 0 || cell.row + 1 >= h || cell.col < 0 || cell.col >= w) {
        throw std::runtime_error("south wall out of range: " + token);
      }
      south[cell.row * w + cell.col] = 1;
    }
  }
  if (!saw_spawn) throw std::runtime_error("maze line has no spawn section");
  std::string a, b, r;
  if (!(in >> a >> b >> r)) throw std::runtime_error("spawn needs three cells");
  if (in >> token) throw std::runtime_error("trailing tokens after spawn");
  MazeLayout layout(h, w, std::move(east), std::move(south));
  SpawnSpec spawn{ParseCell(a), ParseCell(b), ParseCell(r)};
  if (!IsValidSpawn(layout, spawn)) throw std::runtime_error("invalid spawn cells");
  if (FormatMaze(layout, spawn) != line) {
    throw std::runtime_error("maze line is not in canonical form");
  }
  return {std::move(layout), spawn};
}

void WriteReplay(std::ostream& out, const Replay& replay) {
  out << "maze " << FormatMaze(replay.layout, replay.spawn) << '\n';
  out << "episode length=" << replay.env.episode_length
      << " stochastic=" << (replay.env.stochastic_reward ? 1 : 0)
      << " flag=" << (replay.reward_flag ? 1 : 0) << '\n';
  out << "actions";
  for (Action a : replay.actions) out << ' ' << ActionToken(a);
  out << '\n';
}

Replay ReadReplay(std::istream& in) {
  std::string line;
  Replay replay;
  if (!std::getline(in, line) || line.rfind("maze ", 0) != 0) {
    throw std::runtime_error("replay must start with a maze line");
  }
  std::tie(replay.layout, replay.spawn) = ParseMaze(line.substr(5));
  if (!std::getline(in, line)) throw std::runtime_error("replay missing episode line");
  int length = 0;
  int stochastic = 0;
  int flag = 1;
  if (std::sscanf(line.c_str(), "episode length=%d stochastic=%d flag=%d", &length,
                  &stochastic, &flag) != 3 ||
      length <= 0) {
    throw std::runtime_error("bad episode line");
  }
  replay.env.episode_length = length;
  replay.env.stochastic_reward = stochastic != 0;
  replay.reward_flag = flag != 0;
  if (!std::getline(in, line) || line.rfind("actions", 0) != 0) {
    throw std::runtime_error("replay missing actions line");
  }
  std::istringstream tokens(line.substr(7));
  std::string token;
  while (tokens >> token) {
    const auto action = ParseActionToken(token);
    if (!action) throw std::runtime_error("unknown action token '" + token + "'");
    replay.actions.push_back(*action);
  }
  if (static_cast<int>(replay.actions.size()) > length) {
    throw std::runtime_error("replay has more actions than the episode length");
  }
  return replay;
}

std::string RenderAscii(const MazeLayout& layout, const EnvState& state) {
  const int h = layout.height();
  const int w = layout.width();
  std::ostringstream out;
  out << '+';
  for (int c = 0; c < w; ++c) out << "-+";
  out << '\n';
  for (int r = 0; r < h; ++r) {
    out << '|';
    for (int c = 0; c < w; ++c) {
      const Cell cell{r, c};
      char glyph = '.';
      if (cell == state.ramp) glyph = 'R';
      if (cell == state.box) glyph = 'B';
      if (cell == state.agent) glyph = state.carrying_ramp ? 'a' : 'A';
      out << glyph << (layout.HasWall(cell, Direction::kRight) ? '|' : ' ');
    }
    out << "\n+";
    for (int c = 0; c < w; ++c) {
      out << (layout.HasWall({r, c}, Direction::kDown) ? '-' : ' ') << '+';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace autodime::maze
