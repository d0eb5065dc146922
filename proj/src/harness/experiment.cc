#include "autodime/harness/experiment.h"

#include "autodime/maze/occupancy.h"
#include "autodime/teacher/rewards.h"

namespace autodime::harness {
namespace {

enum Stream : std::uint64_t {
  kInitStream,
  kLayoutStream,
  kSpawnStream,
  kRolloutStream,
  kUpdateStream,
};

}  // namespace

Experiment::Experiment(ExperimentConfig config)
    : config_(std::move(config)),
      layout_rng_(DeriveSeed(config_.seed, kLayoutStream)),
      spawn_rng_(DeriveSeed(config_.seed, kSpawnStream)),
      rollout_rng_(DeriveSeed(config_.seed, kRolloutStream)),
      update_rng_(DeriveSeed(config_.seed, kUpdateStream)) {
  Finalize(config_);
  Rng init(DeriveSeed(config_.seed, kInitStream));
  student_ = student::Student(config_.student, init);
  teacher_ = teacher::TeacherPolicy(config_.teacher, init);
}

IterationRecord Experiment::RunIteration(bool evaluate) {
  const MazeSettings& maze = config_.maze;
  const int n = config_.episodes_per_iteration;
  const teacher::SpawnMask mask = teacher::SpawnMask::AllowAll(maze.height * maze.width);

  std::vector<Episode> episodes;
  std::vector<teacher::TeacherTransition> transitions;
  episodes.reserve(n);
  for (int i = 0; i < n; ++i) {
    maze::MazeLayout layout = maze::GenerateLayout(layout_rng_(), maze.height, maze.width, maze.rooms);
    if (config_.sampler == SpawnSampler::kTeacher) {
      teacher::TeacherTransition tr;
      tr.observation = maze::RenderLayout(layout).Flatten();
      const teacher::TeacherAction act = teacher_.Act(tr.observation, layout, mask, spawn_rng_);
      tr.mask = mask;
      tr.proposed = act.proposed;
      tr.log_prob = act.log_prob;
      tr.value = act.value;
      transitions.push_back(std::move(tr));
      episodes.push_back({std::move(layout), act.spawn});
    } else {
      const maze::SpawnSpec spawn = maze::UniformSpawn(spawn_rng_, layout);
      episodes.push_back({std::move(layout), spawn});
    }
  }

  std::vector<student::Trajectory> trajectories =
      Rollout(student_, episodes, maze.env, rollout_rng_);

  IterationRecord record;
  record.iteration = iteration_;
  record.sampling = SamplingProbabilities(episodes);
  const bool on_policy[] = {true};
  for (int i = 0; i < n; ++i) {
    student::FillTargets(trajectories[i], config_.student.gae);
    // A single student per environment, always rolled out on-policy.
    const double per_student[] = {teacher::TeacherReward(config_.reward, trajectories[i], student_)};
    const double reward = teacher::AggregateTeacherReward(per_student, on_policy);
    if (!transitions.empty()) transitions[i].reward = reward;
    record.teacher_reward += reward / n;
    record.mean_return += trajectories[i].Return() / n;
  }

  record.student = student_.Update(trajectories, update_rng_);
  if (config_.sampler == SpawnSampler::kTeacher) {
    record.teacher = teacher_.Update(std::move(transitions), update_rng_);
  }

  if (evaluate) {
    if (eval_episodes_.empty()) {
      eval_episodes_ = SampleHardEpisodes(config_.eval_seed, config_.eval_episodes, maze);
    }
    record.hard_eval_return = EvaluateOnEpisodes(student_, eval_episodes_, maze);
  }
  last_episodes_ = std::move(episodes);
  ++iteration_;
  return record;
}

ExperimentLog RunAutodime(const ExperimentConfig& config,
                          const std::function<void(const IterationRecord&)>& on_row,
                          Experiment* experiment_out) {
  std::optional<Experiment> local;
  if (experiment_out) {
    *experiment_out = Experiment(config);
  } else {
    local.emplace(config);
  }
  Experiment& experiment = experiment_out ? *experiment_out : *local;
  ExperimentLog log;
  const int total = experiment.config().iterations;
  const int every = experiment.config().eval_every;
  for (int i = 0; i < total; ++i) {
    const bool evaluate = (every > 0 && (i + 1) % every == 0) || i + 1 == total;
    log.rows.push_back(experiment.RunIteration(evaluate));
    if (on_row) on_row(log.rows.back());
  }
  return log;
}

}  // namespace autodime::harness
