#ifndef AUTODIME_HARNESS_CHECKPOINT_H_
#define AUTODIME_HARNESS_CHECKPOINT_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "autodime/harness/config.h"
#include "autodime/student/student.h"
#include "autodime/teacher/teacher_policy.h"

namespace autodime::harness {

// Checkpoint file, version 1:
//
//   autodime-checkpoint v1
//   controller learned|shortest-path
//   config <N>
//   <N lines of FormatConfig output>
//   net <name>          (learned only; names: policy value1 value2 clone
//   <mlp v1 block>       teacher_policy teacher_value, in that order)
//   ...
//   end-checkpoint
//
// A shortest-path checkpoint carries no networks; evaluating it runs the
// BFS controller, which gives the optimal return on every instance.
enum class ControllerKind { kLearned, kShortestPath };

struct Checkpoint {
  ExperimentConfig config;
  ControllerKind controller = ControllerKind::kLearned;
  std::optional<student::Student> student;
  std::optional<teacher::TeacherPolicy> teacher;
};

void WriteCheckpoint(std::ostream& out, const ExperimentConfig& config,
                     const student::Student& student, const teacher::TeacherPolicy& teacher);
void WriteShortestPathCheckpoint(std::ostream& out, const ExperimentConfig& config);
// Throws std::runtime_error (or ConfigError) on malformed input.
Checkpoint ReadCheckpoint(std::istream& in);

// Mean return on `episodes` Hard instances drawn from the config's
// evaluation seed.
double EvaluateCheckpoint(const Checkpoint& checkpoint, int episodes);

// Serialized form of the learner networks, for before/after comparisons.
std::string SerializeLearner(const student::Student& student,
                             const teacher::TeacherPolicy& teacher);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_CHECKPOINT_H_
