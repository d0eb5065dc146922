#include "autodime/harness/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "autodime/harness/checkpoint.h"
#include "autodime/harness/config.h"
#include "autodime/harness/csv_log.h"
#include "autodime/harness/evaluation.h"
#include "autodime/harness/experiment.h"
#include "autodime/maze/solver.h"
#include "autodime/maze/text_format.h"

namespace autodime::harness {
namespace {

namespace fs = std::filesystem;

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int Train(ExperimentConfig config, const fs::path& out_dir, std::ostream& out, std::ostream& err) {
  fs::create_directories(out_dir);
  const std::string echo = FormatConfig(config);
  {
    std::ofstream f(out_dir / "config.txt");
    f << echo;
  }
  out << echo;
  std::ofstream csv(out_dir / "log.csv");
  csv << CsvHeader();
  Experiment experiment(config);
  int status = 0;
  try {
    RunAutodime(config, [&](const IterationRecord& row) {
      csv << CsvRow(row);
      csv.flush();
      if (row.hard_eval_return) {
        out << "iteration " << row.iteration << " p_easy=" << row.sampling.easy
            << " p_hard=" << row.sampling.hard << " p_impossible=" << row.sampling.impossible
            << " hard_eval_return=" << *row.hard_eval_return << '\n';
      }
    }, &experiment);
  } catch (const std::exception& e) {
    err << "error: run aborted: " << e.what() << '\n';
    status = 1;
  }
  std::ofstream ckpt(out_dir / "checkpoint.txt");
  WriteCheckpoint(ckpt, experiment.config(), experiment.student(), experiment.teacher());
  return status;
}

std::vector<maze::Action> GreedyActions(const Checkpoint& cp, const Episode& episode) {
  if (cp.controller == ControllerKind::kShortestPath) {
    std::vector<maze::Action> plan =
        maze::PlanToReward(episode.layout, maze::InitialState(episode.spawn))
            .value_or(std::vector<maze::Action>{});
    plan.resize(cp.config.maze.env.episode_length, maze::Action::kStay);
    return plan;
  }
  Rng rng(0);
  const auto traj = Rollout(*cp.student, {episode}, cp.config.maze.env, rng,
                            {.greedy = true, .expected_reward = true});
  std::vector<maze::Action> actions;
  for (int a : traj.front().actions) actions.push_back(static_cast<maze::Action>(a));
  return actions;
}

int Inspect(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read replay " + path);
  const maze::Replay replay = maze::ReadReplay(in);
  maze::EnvState state = maze::InitialState(replay.spawn, replay.reward_flag);
  double total = 0.0;
  out << "t=0\n" << maze::RenderAscii(replay.layout, state);
  for (maze::Action action : replay.actions) {
    const maze::StepResult step = maze::Step(state, replay.layout, action, replay.env);
    total += step.reward;
    state = step.state;
    out << "t=" << state.t << " action=" << maze::ActionToken(action) << " reward=" << step.reward
        << " return=" << total << '\n'
        << maze::RenderAscii(replay.layout, state);
  }
  out << "difficulty " << maze::DifficultyName(maze::ClassifyDifficulty(replay.layout, replay.spawn))
      << " return " << total << '\n';
  return 0;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teacher-driven environment design for a doorless ramp maze", "autodime"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "run";
  auto* train = app.add_subcommand("train", "Run one training experiment");
  train->add_option("--config", config_path, "Config file (section.key = value)")->required();
  train->add_option("--seed", seed, "Override experiment.seed");
  train->add_option("--out", out_dir, "Output directory");

  std::string checkpoint_path;
  int episodes = 100;
  std::string replay_out;
  auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint on Hard environments");
  eval->add_option("--checkpoint", checkpoint_path, "Checkpoint file")->required();
  eval->add_option("--episodes", episodes, "Number of Hard episodes")
      ->required()
      ->check(CLI::PositiveNumber);
  eval->add_option("--replay-out", replay_out, "Write the first evaluated episode as a replay");

  std::string configs_dir;
  std::string sweep_out = "sweep";
  auto* sweep = app.add_subcommand("sweep", "Run every *.cfg in a directory, sequentially");
  sweep->add_option("--configs", configs_dir, "Directory of config files")->required();
  sweep->add_option("--out", sweep_out, "Output root directory");

  std::string replay_path;
  auto* inspect = app.add_subcommand("inspect", "Print a replay as ASCII frames");
  inspect->add_option("--replay", replay_path, "Replay file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*train) {
      ExperimentConfig config = LoadConfig(config_path);
      if (seed) config.seed = *seed;
      return Train(config, out_dir, out, err);
    }
    if (*eval) {
      std::ifstream in(checkpoint_path);
      if (!in) throw std::runtime_error("cannot read checkpoint " + checkpoint_path);
      const Checkpoint cp = ReadCheckpoint(in);
      const double mean = EvaluateCheckpoint(cp, episodes);
      out << "mean_hard_return " << Num(mean) << '\n';
      if (!replay_out.empty()) {
        const Episode first = SampleHardEpisodes(cp.config.eval_seed, 1, cp.config.maze).front();
        maze::Replay replay{first.layout, first.spawn, cp.config.maze.env, true,
                            GreedyActions(cp, first)};
        replay.env.stochastic_reward = false;
        std::ofstream f(replay_out);
        maze::WriteReplay(f, replay);
      }
      return 0;
    }
    if (*sweep) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(configs_dir)) {
        if (entry.path().extension() == ".cfg") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw ConfigError("no *.cfg files in " + configs_dir);
      int status = 0;
      for (const fs::path& file : files) {
        out << "== " << file.filename().string() << '\n';
        status = std::max(status, Train(LoadConfig(file.string()), fs::path(sweep_out) / file.stem(),
                                         out, err));
      }
      return status;
    }
    if (*inspect) return Inspect(replay_path, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace autodime::harness
