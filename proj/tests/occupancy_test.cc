#include <gtest/gtest.h>

#include "autodime/error.h"
#include "autodime/maze/layout.h"
#include "autodime/maze/occupancy.h"
#include "autodime/maze/spawn.h"
#include "autodime/random.h"

namespace autodime::maze {
namespace {

TEST(OccupancyTest, DecodeInvertsEncode) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const MazeLayout layout = GenerateLayout(rng(), 12, 12, 6);
    const SpawnSpec spawn = UniformSpawn(rng, layout);
    const auto [decoded_layout, decoded_spawn] = DecodeOccupancy(RenderOccupancy(layout, spawn));
    EXPECT_EQ(decoded_layout, layout);
    EXPECT_EQ(decoded_spawn, spawn);
  }
}

TEST(OccupancyTest, ObjectChannelsAreOneHot) {
  Rng rng(2);
  const MazeLayout layout = GenerateLayout(rng(), 12, 12, 6);
  const SpawnSpec spawn = UniformSpawn(rng, layout);
  const OccupancyMap map = RenderOccupancy(layout, spawn);
  EXPECT_EQ(map.channels, kOccupancyChannels);
  EXPECT_EQ(map.ChannelSum(kAgentChannel), 1.0);
  EXPECT_EQ(map.ChannelSum(kBoxChannel), 1.0);
  EXPECT_EQ(map.ChannelSum(kRampChannel), 1.0);
  EXPECT_EQ(map.at(kAgentChannel, spawn.agent.row, spawn.agent.col), 1.0);
  EXPECT_EQ(map.at(kRampChannel, spawn.ramp.row, spawn.ramp.col), 1.0);
}

TEST(OccupancyTest, SingleWallEdgeChangesMap) {
  std::vector<std::uint8_t> east(4 * 3, 0);
  std::vector<std::uint8_t> south(3 * 4, 0);
  const MazeLayout open(4, 4, east, south);
  east[5] = 1;
  const MazeLayout walled(4, 4, east, south);
  const SpawnSpec spawn{{0, 0}, {3, 3}, {2, 2}};
  const OccupancyMap a = RenderOccupancy(open, spawn);
  const OccupancyMap b = RenderOccupancy(walled, spawn);
  EXPECT_FALSE(a == b);
  // East wall of (1, 2) is also the west wall of (1, 3).
  EXPECT_EQ(b.at(kWallRightChannel, 1, 2), 1.0);
  EXPECT_EQ(b.at(kWallLeftChannel, 1, 3), 1.0);
  EXPECT_EQ(a.at(kWallRightChannel, 1, 2), 0.0);
}

TEST(OccupancyTest, LayoutMapHasOnlyWallChannels) {
  const MazeLayout layout(3, 5);
  const OccupancyMap map = RenderLayout(layout);
  EXPECT_EQ(map.channels, kLayoutChannels);
  EXPECT_EQ(map.Flatten().size(), kLayoutChannels * 15);
  // Boundary cells only: top row has five up walls.
  EXPECT_EQ(map.ChannelSum(kWallUpChannel), 5.0);
  EXPECT_EQ(map.ChannelSum(kWallLeftChannel), 3.0);
}

TEST(OccupancyTest, InconsistentWallsAreRejected) {
  const MazeLayout layout(4, 4);
  OccupancyMap map = RenderOccupancy(layout, {{0, 0}, {3, 3}, {2, 2}});
  map.at(kWallRightChannel, 1, 1) = 1.0;
  EXPECT_THROW(DecodeOccupancy(map), ContractViolation);
}

TEST(OccupancyTest, MissingObjectIsRejected) {
  const MazeLayout layout(4, 4);
  OccupancyMap map = RenderOccupancy(layout, {{0, 0}, {3, 3}, {2, 2}});
  map.at(kBoxChannel, 3, 3) = 0.0;
  EXPECT_THROW(DecodeOccupancy(map), ContractViolation);
}

}  // namespace
}  // namespace autodime::maze
