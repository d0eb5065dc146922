#ifndef AUTODIME_HARNESS_CONFIG_H_
#define AUTODIME_HARNESS_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "autodime/maze/env.h"
#include "autodime/student/student.h"
#include "autodime/teacher/rewards.h"
#include "autodime/teacher/teacher_policy.h"

namespace autodime::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MazeSettings {
  int height = 12;
  int width = 12;
  int rooms = 6;
  maze::EnvConfig env;
};

enum class SpawnSampler { kTeacher, kUniform };

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int iterations = 300;
  int episodes_per_iteration = 64;
  SpawnSampler sampler = SpawnSampler::kTeacher;
  int eval_every = 25;
  int eval_episodes = 100;
  std::uint64_t eval_seed = 20211111;

  teacher::TeacherRewardKind reward = teacher::TeacherRewardKind::kValueDisagreement;
  MazeSettings maze;
  student::StudentConfig student;
  teacher::TeacherConfig teacher;
};

// Presets. "desk": 12x12 grid, 6 rooms, 64-step episodes, gamma 0.99.
// "paper": 30x30 grid, 20 rooms, 160-step episodes, gamma 0.998.
// "tiny": 6x6 grid, 2 rooms, 16-step episodes, small batches (smoke runs).
void ApplyEnvPreset(ExperimentConfig& config, const std::string& name);
void ApplyStudentPreset(ExperimentConfig& config, const std::string& name);

// Flat `section.key = value` text; `#` starts a comment. Preset keys
// (env.preset, student.preset) are applied before all other keys regardless
// of their position. Unknown keys and malformed values throw ConfigError
// naming the key.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);

// Canonical text form; ParseConfig(FormatConfig(c)) reproduces c.
std::string FormatConfig(const ExperimentConfig& config);

// Keeps derived sizes in sync (teacher grid, observation size) and checks
// ranges. Throws ConfigError.
void Finalize(ExperimentConfig& config);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_CONFIG_H_
