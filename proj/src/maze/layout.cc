#include "autodime/maze/layout.h"

#include <cstdlib>
#include <string>

#include "autodime/error.h"
#include "autodime/random.h"

namespace autodime::maze {

Cell Neighbor(Cell cell, Direction dir) {
  switch (dir) {
    case Direction::kUp:
      return {cell.row - 1, cell.col};
    case Direction::kDown:
      return {cell.row + 1, cell.col};
    case Direction::kLeft:
      return {cell.row, cell.col - 1};
    case Direction::kRight:
      return {cell.row, cell.col + 1};
  }
  return cell;
}

int ChebyshevDistance(Cell a, Cell b) {
  return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

MazeLayout::MazeLayout(int height, int width)
    : MazeLayout(height, width,
                 std::vector<std::uint8_t>(height > 0 && width > 1
                                               ? height * (width - 1) : 0, 0),
                 std::vector<std::uint8_t>(height > 1 && width > 0
                                               ? (height - 1) * width : 0, 0)) {}

MazeLayout::MazeLayout(int height, int width, std::vector<std::uint8_t> east,
                       std::vector<std::uint8_t> south)
    : height_(height), width_(width), east_(std::move(east)), south_(std::move(south)) {
  Require(height > 0 && width > 0, "maze dimensions must be positive");
  Require(east_.size() == static_cast<std::size_t>(height * (width - 1)),
          "east wall array has wrong size");
  Require(south_.size() == static_cast<std::size_t>((height - 1) * width),
          "south wall array has wrong size");
  for (auto& w : east_) w = w ? 1 : 0;
  for (auto& w : south_) w = w ? 1 : 0;
  LabelRooms();
}

bool MazeLayout::InBounds(Cell cell) const {
  return cell.row >= 0 && cell.row < height_ && cell.col >= 0 && cell.col < width_;
}

bool MazeLayout::HasInteriorWall(Cell cell, Direction dir) const {
  const Cell next = Neighbor(cell, dir);
  if (!InBounds(cell) || !InBounds(next)) return false;
  switch (dir) {
    case Direction::kRight:
      return east_[cell.row * (width_ - 1) + cell.col] != 0;
    case Direction::kLeft:
      return east_[next.row * (width_ - 1) + next.col] != 0;
    case Direction::kDown:
      return south_[cell.row * width_ + cell.col] != 0;
    case Direction::kUp:
      return south_[next.row * width_ + next.col] != 0;
  }
  return false;
}

bool MazeLayout::HasWall(Cell cell, Direction dir) const {
  if (!InBounds(Neighbor(cell, dir))) return true;
  return HasInteriorWall(cell, dir);
}

std::vector<Cell> MazeLayout::RoomCells(int room) const {
  std::vector<Cell> cells;
  for (int i = 0; i < cell_count(); ++i) {
    if (room_ids_[i] == room) cells.push_back(CellAt(i));
  }
  return cells;
}

void MazeLayout::LabelRooms() {
  room_ids_.assign(cell_count(), -1);
  room_count_ = 0;
  std::vector<int> stack;
  for (int start = 0; start < cell_count(); ++start) {
    if (room_ids_[start] >= 0) continue;
    room_ids_[start] = room_count_;
    stack.push_back(start);
    while (!stack.empty()) {
      const Cell cell = CellAt(stack.back());
      stack.pop_back();
      for (Direction dir : kAllDirections) {
        if (HasWall(cell, dir)) continue;
        const int next = Index(Neighbor(cell, dir));
        if (room_ids_[next] < 0) {
          room_ids_[next] = room_count_;
          stack.push_back(next);
        }
      }
    }
    ++room_count_;
  }
}

namespace {

struct Rect {
  int row, col, height, width;
  int area() const { return height * width; }
};

}  // namespace

MazeLayout GenerateLayout(std::uint64_t seed, int height, int width,
                          int target_rooms) {
  Require(height > 0 && width > 0, "maze dimensions must be positive");
  Require(target_rooms >= 1, "target_rooms must be at least 1");
  Require(height * width >= 4 * target_rooms,
          "grid " + std::to_string(height) + "x" + std::to_string(width) +
              " is too small for " + std::to_string(target_rooms) + " rooms");
  Rng rng(seed);
  std::vector<Rect> rooms = {{0, 0, height, width}};
  std::vector<std::uint8_t> east(height * (width - 1), 0);
  std::vector<std::uint8_t> south((height - 1) * width, 0);

  std::vector<double> weights;
  while (static_cast<int>(rooms.size()) < target_rooms) {
    weights.clear();
    for (const Rect& r : rooms) {
      const double a = r.area() >= 2 ? r.area() : 0.0;
      weights.push_back(a * a);
    }
    const int pick = SampleFromWeights(rng, weights);
    const Rect r = rooms[pick];
    rooms.erase(rooms.begin() + pick);

    bool cut_rows = r.height > r.width;
    if (r.height == r.width) cut_rows = Bernoulli(rng, 0.5);
    if (cut_rows) {
      // New wall below row (r.row + split - 1).
      const int split = 1 + static_cast<int>(UniformIndex(rng, r.height - 1));
      const int wall_row = r.row + split - 1;
      for (int c = r.col; c < r.col + r.width; ++c) south[wall_row * width + c] = 1;
      rooms.push_back({r.row, r.col, split, r.width});
      rooms.push_back({r.row + split, r.col, r.height - split, r.width});
    } else {
      const int split = 1 + static_cast<int>(UniformIndex(rng, r.width - 1));
      const int wall_col = r.col + split - 1;
      for (int row = r.row; row < r.row + r.height; ++row) {
        east[row * (width - 1) + wall_col] = 1;
      }
      rooms.push_back({r.row, r.col, r.height, split});
      rooms.push_back({r.row, r.col + split, r.height, r.width - split});
    }
  }
  return MazeLayout(height, width, std::move(east), std::move(south));
}

}  // namespace autodime::maze
