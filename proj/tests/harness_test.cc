#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "autodime/error.h"
#include "autodime/harness/checkpoint.h"
#include "autodime/harness/config.h"
#include "autodime/harness/csv_log.h"
#include "autodime/harness/evaluation.h"
#include "autodime/harness/experiment.h"
#include "autodime/maze/solver.h"

namespace autodime::harness {
namespace {

ExperimentConfig TinyConfig(int iterations) {
  ExperimentConfig config =
      ParseConfig("env.preset = tiny\nexperiment.iterations = " + std::to_string(iterations) +
                  "\nexperiment.eval_every = 2\n");
  return config;
}

std::string RunToCsv(const ExperimentConfig& config) {
  std::ostringstream out;
  WriteCsv(out, RunAutodime(config));
  return out.str();
}

Episode MakeEpisode(const maze::MazeLayout& layout, maze::SpawnSpec spawn) {
  return {layout, spawn};
}

TEST(SamplingProbabilitiesTest, AllEasy) {
  const maze::MazeLayout layout(4, 4);
  const std::vector<Episode> window(5, MakeEpisode(layout, {{0, 0}, {1, 1}, {2, 2}}));
  const DifficultyFrequencies p = SamplingProbabilities(window);
  EXPECT_EQ(p.easy, 1.0);
  EXPECT_EQ(p.hard, 0.0);
  EXPECT_EQ(p.impossible, 0.0);
}

TEST(SamplingProbabilitiesTest, MixedWindow) {
  std::vector<std::uint8_t> east(4 * 3, 0);
  for (int r = 0; r < 4; ++r) east[r * 3 + 1] = 1;
  const maze::MazeLayout layout(4, 4, east, std::vector<std::uint8_t>(12, 0));
  const std::vector<Episode> window = {
      MakeEpisode(layout, {{0, 0}, {1, 1}, {2, 3}}),
      MakeEpisode(layout, {{0, 0}, {1, 3}, {2, 1}}),
      MakeEpisode(layout, {{0, 0}, {1, 3}, {2, 0}}),
      MakeEpisode(layout, {{0, 0}, {1, 3}, {2, 3}}),
  };
  const DifficultyFrequencies p = SamplingProbabilities(window);
  EXPECT_EQ(p.easy, 0.25);
  EXPECT_EQ(p.hard, 0.5);
  EXPECT_EQ(p.impossible, 0.25);
}

TEST(SamplingProbabilitiesTest, EmptyWindowIsRejected) {
  EXPECT_THROW(SamplingProbabilities({}), ContractViolation);
}

TEST(SamplingProbabilitiesTest, RecountAgrees) {
  Rng rng(1);
  std::vector<Episode> window;
  for (int i = 0; i < 500; ++i) {
    maze::MazeLayout layout = maze::GenerateLayout(rng(), 12, 12, 6);
    const maze::SpawnSpec spawn = maze::UniformSpawn(rng, layout);
    window.push_back({std::move(layout), spawn});
  }
  int easy = 0;
  int hard = 0;
  for (const Episode& e : window) {
    const int agent_room = e.layout.RoomOf(e.spawn.agent);
    if (agent_room == e.layout.RoomOf(e.spawn.box)) {
      ++easy;
    } else if (agent_room == e.layout.RoomOf(e.spawn.ramp)) {
      ++hard;
    }
  }
  const DifficultyFrequencies p = SamplingProbabilities(window);
  EXPECT_DOUBLE_EQ(p.easy, easy / 500.0);
  EXPECT_DOUBLE_EQ(p.hard, hard / 500.0);
  EXPECT_NEAR(p.easy + p.hard + p.impossible, 1.0, 1e-9);
}

TEST(ConfigTest, UnknownKeyIsNamed) {
  try {
    ParseConfig("student.learning_rat = 0.1\n");
    FAIL() << "expected a ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("student.learning_rat"), std::string::npos);
  }
}

TEST(ConfigTest, BadValuesAreRejected) {
  EXPECT_THROW(ParseConfig("teacher.reward = regret\n"), ConfigError);
  EXPECT_THROW(ParseConfig("experiment.iterations = many\n"), ConfigError);
  EXPECT_THROW(ParseConfig("no equals sign\n"), ConfigError);
}

TEST(ConfigTest, FormatParsesBackToSameConfig) {
  const ExperimentConfig config = ParseConfig(
      "env.preset = paper\nstudent.preset = paper\nteacher.reward = pd\n"
      "experiment.seed = 17\nstudent.hidden = 32, 16\nenv.variant = stochastic\n");
  EXPECT_EQ(config.maze.height, 30);
  EXPECT_EQ(config.maze.rooms, 20);
  EXPECT_EQ(config.maze.env.episode_length, 160);
  EXPECT_TRUE(config.maze.env.stochastic_reward);
  EXPECT_EQ(config.student.hidden, (std::vector<int>{32, 16}));
  const std::string text = FormatConfig(config);
  EXPECT_EQ(FormatConfig(ParseConfig(text)), text);
}

TEST(ConfigTest, CommentsAndBlankLinesAreIgnored) {
  const ExperimentConfig config = ParseConfig("# comment\n\nexperiment.seed = 5  # trailing\n");
  EXPECT_EQ(config.seed, 5u);
}

TEST(ConfigTest, ShippedConfigsLoad) {
  int loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(AUTODIME_CONFIG_DIR)) {
    if (entry.path().extension() != ".cfg") continue;
    SCOPED_TRACE(entry.path().string());
    EXPECT_NO_THROW(LoadConfig(entry.path().string()));
    ++loaded;
  }
  EXPECT_GE(loaded, 4);
}

TEST(ConfigTest, DefaultsMatchDeskPresets) {
  EXPECT_EQ(FormatConfig(ParseConfig("")),
            FormatConfig(ParseConfig("env.preset = desk\nstudent.preset = desk\n")));
}

TEST(EvaluationTest, SampledEpisodesAreAllHard) {
  const MazeSettings settings;
  for (const Episode& e : SampleHardEpisodes(3, 200, settings)) {
    EXPECT_EQ(maze::ClassifyDifficulty(e.layout, e.spawn), maze::Difficulty::kHard);
  }
}

TEST(EvaluationTest, RejectionLimitIsEnforced) {
  // One room means the agent always shares the box's room.
  MazeSettings settings;
  settings.rooms = 1;
  EXPECT_THROW(SampleHardEpisodes(3, 1, settings, 1000), ContractViolation);
}

TEST(EvaluationTest, RandomInitPolicyScoresNearZero) {
  // Measured once: greedy randomly initialized students score 0 on 1000
  // Hard episodes and sampling ones stay below 0.11.
  ExperimentConfig config = ParseConfig("");
  Finalize(config);
  Rng rng(1);
  const student::Student student(config.student, rng);
  EXPECT_LE(EvaluateHard(student, config.eval_seed, 1000, config.maze), 0.25);
}

TEST(EvaluationTest, ScriptedControllerReachesOptimum) {
  const MazeSettings settings;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Episode e = SampleHardEpisodes(seed, 1, settings).front();
    EXPECT_EQ(EvaluateHardScripted(seed, 1, settings),
              maze::OptimalReturn(e.layout, e.spawn, settings.env.episode_length));
  }
}

TEST(EvaluationTest, EvaluationLeavesLearnerUntouched) {
  Experiment experiment(TinyConfig(2));
  experiment.RunIteration(false);
  const std::string before = SerializeLearner(experiment.student(), experiment.teacher());
  EvaluateHard(experiment.student(), 9, 20, experiment.config().maze);
  EXPECT_EQ(SerializeLearner(experiment.student(), experiment.teacher()), before);
}

TEST(ExperimentTest, ZeroBudgetGivesEmptyLog) {
  EXPECT_TRUE(RunAutodime(TinyConfig(0)).rows.empty());
}

TEST(ExperimentTest, RowsAreOnTheSimplex) {
  const ExperimentLog log = RunAutodime(TinyConfig(5));
  ASSERT_EQ(log.rows.size(), 5u);
  for (const IterationRecord& row : log.rows) {
    EXPECT_NEAR(row.sampling.easy + row.sampling.hard + row.sampling.impossible, 1.0, 1e-9);
  }
  EXPECT_FALSE(log.rows[0].hard_eval_return.has_value());
  EXPECT_TRUE(log.rows[1].hard_eval_return.has_value());
  EXPECT_TRUE(log.rows[4].hard_eval_return.has_value());
}

TEST(ExperimentTest, SameSeedGivesIdenticalCsv) {
  for (const char* reward : {"vd", "vpe", "pd", "constant"}) {
    ExperimentConfig config = TinyConfig(4);
    config.reward = *teacher::ParseRewardKind(reward);
    EXPECT_EQ(RunToCsv(config), RunToCsv(config)) << reward;
  }
}

TEST(ExperimentTest, DifferentSeedsDiffer) {
  ExperimentConfig a = TinyConfig(3);
  ExperimentConfig b = TinyConfig(3);
  b.seed = 2;
  EXPECT_NE(RunToCsv(a), RunToCsv(b));
}

TEST(ExperimentTest, TeacherSamplesFromTheLayoutGenerator) {
  Experiment experiment(TinyConfig(1));
  experiment.RunIteration(false);
  for (const Episode& e : experiment.last_episodes()) {
    EXPECT_EQ(e.layout.room_count(), experiment.config().maze.rooms);
    EXPECT_TRUE(maze::IsValidSpawn(e.layout, e.spawn));
  }
}

TEST(CsvTest, HeaderAndColumnCount) {
  const ExperimentLog log = RunAutodime(TinyConfig(2));
  std::ostringstream out;
  WriteCsv(out, log);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# autodime log schema 1");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("iteration,p_easy,p_hard,p_impossible", 0), 0u);
  EXPECT_EQ(out.str().rfind(CsvHeader(), 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 13);
    ++rows;
  }
  EXPECT_EQ(rows, 2);
}

TEST(CheckpointTest, RoundTripPreservesNetworksAndEvaluation) {
  Experiment experiment(TinyConfig(2));
  experiment.RunIteration(false);
  std::stringstream stream;
  WriteCheckpoint(stream, experiment.config(), experiment.student(), experiment.teacher());
  const Checkpoint checkpoint = ReadCheckpoint(stream);
  ASSERT_TRUE(checkpoint.student.has_value());
  ASSERT_TRUE(checkpoint.teacher.has_value());
  EXPECT_TRUE(checkpoint.student->policy() == experiment.student().policy());
  EXPECT_TRUE(checkpoint.student->value1() == experiment.student().value1());
  EXPECT_TRUE(checkpoint.student->value2() == experiment.student().value2());
  EXPECT_TRUE(checkpoint.student->clone() == experiment.student().clone());
  EXPECT_TRUE(checkpoint.teacher->policy() == experiment.teacher().policy());
  EXPECT_TRUE(checkpoint.teacher->value() == experiment.teacher().value());
  EXPECT_EQ(FormatConfig(checkpoint.config), FormatConfig(experiment.config()));
  EXPECT_EQ(EvaluateCheckpoint(checkpoint, 4),
            EvaluateHard(experiment.student(), experiment.config().eval_seed, 4,
                         experiment.config().maze));
}

TEST(CheckpointTest, MalformedInputIsRejected) {
  std::stringstream stream("autodime-checkpoint v2\n");
  EXPECT_ANY_THROW(ReadCheckpoint(stream));
  std::stringstream truncated("autodime-checkpoint v1\ncontroller learned\nconfig 1\n");
  EXPECT_ANY_THROW(ReadCheckpoint(truncated));
}

}  // namespace
}  // namespace autodime::harness
