#ifndef AUTODIME_MAZE_OCCUPANCY_H_
#define AUTODIME_MAZE_OCCUPANCY_H_

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "autodime/maze/layout.h"
#include "autodime/maze/spawn.h"

namespace autodime::maze {

// Channel order of the occupancy map. The four wall channels mark, per cell,
// whether the edge on that side is walled (boundary included); the object
// channels are one-hot.
enum OccupancyChannel {
  kWallUpChannel,
  kWallDownChannel,
  kWallLeftChannel,
  kWallRightChannel,
  kAgentChannel,
  kBoxChannel,
  kRampChannel,
};
inline constexpr int kLayoutChannels = 4;
inline constexpr int kOccupancyChannels = 7;

struct OccupancyMap {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;  // channel-major, then row-major

  double at(int channel, int row, int col) const {
    return data[(channel * height + row) * width + col];
  }
  double& at(int channel, int row, int col) {
    return data[(channel * height + row) * width + col];
  }
  double ChannelSum(int channel) const;
  Eigen::VectorXd Flatten() const;
  bool operator==(const OccupancyMap&) const = default;
};

// Layout-only map (wall channels), which is what the teacher observes.
OccupancyMap RenderLayout(const MazeLayout& layout);
OccupancyMap RenderOccupancy(const MazeLayout& layout, const SpawnSpec& spawn);

// Inverse of RenderOccupancy. Throws ContractViolation when the map is not a
// valid encoding.
std::pair<MazeLayout, SpawnSpec> DecodeOccupancy(const OccupancyMap& map);

}  // namespace autodime::maze

#endif  // AUTODIME_MAZE_OCCUPANCY_H_
