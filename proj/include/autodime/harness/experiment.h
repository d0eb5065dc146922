#ifndef AUTODIME_HARNESS_EXPERIMENT_H_
#define AUTODIME_HARNESS_EXPERIMENT_H_

#include <functional>
#include <optional>
#include <vector>

#include "autodime/harness/config.h"
#include "autodime/harness/evaluation.h"
#include "autodime/harness/rollout.h"
#include "autodime/random.h"
#include "autodime/student/student.h"
#include "autodime/teacher/teacher_policy.h"

namespace autodime::harness {

struct IterationRecord {
  int iteration = 0;
  DifficultyFrequencies sampling;  // over this iteration's episodes
  double teacher_reward = 0.0;     // mean over episodes
  double mean_return = 0.0;
  student::StudentUpdateStats student;
  teacher::TeacherUpdateStats teacher;
  std::optional<double> hard_eval_return;
};

struct ExperimentLog {
  std::vector<IterationRecord> rows;
};

// One teacher/student training run. Each iteration samples a batch of
// layouts from the fixed generator, places the agent, box and ramp with the
// teacher (or uniformly), rolls out the student, scores every episode with
// the configured teacher reward, and then updates student and teacher.
// Everything is single-threaded and driven by generators derived from the
// config seed, so a run is a pure function of its config.
class Experiment {
 public:
  explicit Experiment(ExperimentConfig config);

  const ExperimentConfig& config() const { return config_; }
  int completed_iterations() const { return iteration_; }

  IterationRecord RunIteration(bool evaluate);

  student::Student& student() { return student_; }
  const student::Student& student() const { return student_; }
  teacher::TeacherPolicy& teacher() { return teacher_; }
  const teacher::TeacherPolicy& teacher() const { return teacher_; }

  // Episodes sampled during the last iteration.
  const std::vector<Episode>& last_episodes() const { return last_episodes_; }

 private:
  ExperimentConfig config_;
  student::Student student_;
  teacher::TeacherPolicy teacher_;
  Rng layout_rng_;
  Rng spawn_rng_;
  Rng rollout_rng_;
  Rng update_rng_;
  std::vector<Episode> eval_episodes_;
  std::vector<Episode> last_episodes_;
  int iteration_ = 0;
};

// Runs `config.iterations` iterations, evaluating every `eval_every`
// iterations and after the last one. `on_row` sees each record as soon as
// it exists, so callers can flush logs incrementally.
ExperimentLog RunAutodime(const ExperimentConfig& config,
                          const std::function<void(const IterationRecord&)>& on_row = {},
                          Experiment* experiment_out = nullptr);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_EXPERIMENT_H_
