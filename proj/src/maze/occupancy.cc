#include "autodime/maze/occupancy.h"

#include <numeric>

#include "autodime/error.h"

namespace autodime::maze {
namespace {

void FillWalls(const MazeLayout& layout, OccupancyMap& map) {
  for (int r = 0; r < layout.height(); ++r) {
    for (int c = 0; c < layout.width(); ++c) {
      const Cell cell{r, c};
      map.at(kWallUpChannel, r, c) = layout.HasWall(cell, Direction::kUp);
      map.at(kWallDownChannel, r, c) = layout.HasWall(cell, Direction::kDown);
      map.at(kWallLeftChannel, r, c) = layout.HasWall(cell, Direction::kLeft);
      map.at(kWallRightChannel, r, c) = layout.HasWall(cell, Direction::kRight);
    }
  }
}

OccupancyMap Blank(int channels, const MazeLayout& layout) {
  OccupancyMap map;
  map.channels = channels;
  map.height = layout.height();
  map.width = layout.width();
  map.data.assign(static_cast<std::size_t>(channels) * map.height * map.width, 0.0);
  return map;
}

Cell FindOne(const OccupancyMap& map, int channel) {
  Require(map.ChannelSum(channel) == 1.0, "object channel is not one-hot");
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c) {
      if (map.at(channel, r, c) == 1.0) return {r, c};
    }
  }
  throw ContractViolation("object channel is not one-hot");
}

}  // namespace

double OccupancyMap::ChannelSum(int channel) const {
  const auto begin = data.begin() + static_cast<long>(channel) * height * width;
  return std::accumulate(begin, begin + height * width, 0.0);
}

Eigen::VectorXd OccupancyMap::Flatten() const {
  return Eigen::Map<const Eigen::VectorXd>(data.data(), static_cast<Eigen::Index>(data.size()));
}

OccupancyMap RenderLayout(const MazeLayout& layout) {
  OccupancyMap map = Blank(kLayoutChannels, layout);
  FillWalls(layout, map);
  return map;
}

OccupancyMap RenderOccupancy(const MazeLayout& layout, const SpawnSpec& spawn) {
  Require(IsValidSpawn(layout, spawn), "invalid spawn for occupancy map");
  OccupancyMap map = Blank(kOccupancyChannels, layout);
  FillWalls(layout, map);
  map.at(kAgentChannel, spawn.agent.row, spawn.agent.col) = 1.0;
  map.at(kBoxChannel, spawn.box.row, spawn.box.col) = 1.0;
  map.at(kRampChannel, spawn.ramp.row, spawn.ramp.col) = 1.0;
  return map;
}

std::pair<MazeLayout, SpawnSpec> DecodeOccupancy(const OccupancyMap& map) {
  Require(map.channels == kOccupancyChannels, "occupancy map has wrong channel count");
  Require(map.height > 0 && map.width > 0 &&
              map.data.size() == static_cast<std::size_t>(map.channels) * map.height * map.width,
          "occupancy map has inconsistent shape");
  const int h = map.height;
  const int w = map.width;
  std::vector<std::uint8_t> east(h * (w - 1));
  std::vector<std::uint8_t> south((h - 1) * w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c + 1 < w; ++c) east[r * (w - 1) + c] = map.at(kWallRightChannel, r, c) != 0.0;
  }
  for (int r = 0; r + 1 < h; ++r) {
    for (int c = 0; c < w; ++c) south[r * w + c] = map.at(kWallDownChannel, r, c) != 0.0;
  }
  MazeLayout layout(h, w, std::move(east), std::move(south));
  const SpawnSpec spawn{FindOne(map, kAgentChannel), FindOne(map, kBoxChannel),
                        FindOne(map, kRampChannel)};
  Require(RenderOccupancy(layout, spawn) == map, "occupancy wall channels are inconsistent");
  return {std::move(layout), spawn};
}

}  // namespace autodime::maze
