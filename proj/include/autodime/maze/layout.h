#ifndef AUTODIME_MAZE_LAYOUT_H_
#define AUTODIME_MAZE_LAYOUT_H_

#include <compare>
#include <cstdint>
#include <vector>

namespace autodime::maze {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class Direction { kUp, kDown, kLeft, kRight };
inline constexpr Direction kAllDirections[] = {Direction::kUp, Direction::kDown,
                                               Direction::kLeft, Direction::kRight};

Cell Neighbor(Cell cell, Direction dir);
int ChebyshevDistance(Cell a, Cell b);

// A grid of H x W cells with walls on edges between orthogonally adjacent
// cells. The outer boundary is always walled. Rooms are the connected
// components of the cell graph under wall-free adjacency, so distinct rooms
// never share an open edge.
class MazeLayout {
 public:
  MazeLayout() = default;
  // Single room, no interior walls.
  MazeLayout(int height, int width);
  // east[r * (W - 1) + c]: wall between (r, c) and (r, c + 1).
  // south[r * W + c]: wall between (r, c) and (r + 1, c).
  MazeLayout(int height, int width, std::vector<std::uint8_t> east,
             std::vector<std::uint8_t> south);

  int height() const { return height_; }
  int width() const { return width_; }
  int cell_count() const { return height_ * width_; }
  int room_count() const { return room_count_; }

  bool InBounds(Cell cell) const;
  int Index(Cell cell) const { return cell.row * width_ + cell.col; }
  Cell CellAt(int index) const { return {index / width_, index % width_}; }

  // True for interior walls and for the outer boundary.
  bool HasWall(Cell cell, Direction dir) const;
  // True only for walls with a cell on both sides.
  bool HasInteriorWall(Cell cell, Direction dir) const;

  int RoomOf(Cell cell) const { return room_ids_[Index(cell)]; }
  const std::vector<int>& room_ids() const { return room_ids_; }
  std::vector<Cell> RoomCells(int room) const;

  const std::vector<std::uint8_t>& east_walls() const { return east_; }
  const std::vector<std::uint8_t>& south_walls() const { return south_; }

  bool operator==(const MazeLayout& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           east_ == other.east_ && south_ == other.south_;
  }

 private:
  void LabelRooms();

  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> east_;
  std::vector<std::uint8_t> south_;
  std::vector<int> room_ids_;
  int room_count_ = 0;
};

// Recursive binary splitting into exactly target_rooms rectangular rooms.
// Each split picks a room with probability proportional to its squared area,
// cuts across its longer side (coin flip for squares) at a uniform position,
// and walls off the cut completely. Deterministic per seed.
MazeLayout GenerateLayout(std::uint64_t seed, int height, int width,
                          int target_rooms);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_LAYOUT_H_
