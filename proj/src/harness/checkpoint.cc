#include "autodime/harness/checkpoint.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "autodime/harness/evaluation.h"
#include "autodime/nn/serialize.h"

namespace autodime::harness {
namespace {

void WriteHeader(std::ostream& out, const ExperimentConfig& config, ControllerKind kind) {
  const std::string text = FormatConfig(config);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  out << "autodime-checkpoint v1\ncontroller "
      << (kind == ControllerKind::kLearned ? "learned" : "shortest-path") << "\nconfig " << lines
      << '\n'
      << text;
}

void WriteNets(std::ostream& out, const student::Student& student,
               const teacher::TeacherPolicy& teacher) {
  const std::pair<const char*, const nn::Mlp*> nets[] = {
      {"policy", &student.policy()},          {"value1", &student.value1()},
      {"value2", &student.value2()},          {"clone", &student.clone()},
      {"teacher_policy", &teacher.policy()},  {"teacher_value", &teacher.value()}};
  const std::int64_t steps[] = {student.policy_optimizer().step_count(),
                                student.value1_optimizer().step_count(),
                                student.value2_optimizer().step_count(),
                                student.clone_optimizer().step_count(),
                                teacher.policy_optimizer().step_count(),
                                teacher.value_optimizer().step_count()};
  for (std::size_t i = 0; i < std::size(nets); ++i) {
    out << "net " << nets[i].first << '\n';
    nn::WriteNetwork(out, *nets[i].second, steps[i]);
  }
}

std::string Line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(std::string("checkpoint missing ") + what);
  return line;
}

void ReadInto(std::istream& in, const std::string& name, nn::Mlp& net) {
  if (Line(in, "net line") != "net " + name) {
    throw std::runtime_error("checkpoint expected network '" + name + "'");
  }
  nn::NetworkRecord record = nn::ReadNetwork(in);
  if (record.net.layer_dims() != net.layer_dims()) {
    throw std::runtime_error("network '" + name + "' does not match the configured architecture");
  }
  net = std::move(record.net);
}

}  // namespace

void WriteCheckpoint(std::ostream& out, const ExperimentConfig& config,
                     const student::Student& student, const teacher::TeacherPolicy& teacher) {
  WriteHeader(out, config, ControllerKind::kLearned);
  WriteNets(out, student, teacher);
  out << "end-checkpoint\n";
}

void WriteShortestPathCheckpoint(std::ostream& out, const ExperimentConfig& config) {
  WriteHeader(out, config, ControllerKind::kShortestPath);
  out << "end-checkpoint\n";
}

Checkpoint ReadCheckpoint(std::istream& in) {
  if (Line(in, "header") != "autodime-checkpoint v1") {
    throw std::runtime_error("not an autodime checkpoint");
  }
  Checkpoint cp;
  const std::string controller = Line(in, "controller line");
  if (controller == "controller learned") {
    cp.controller = ControllerKind::kLearned;
  } else if (controller == "controller shortest-path") {
    cp.controller = ControllerKind::kShortestPath;
  } else {
    throw std::runtime_error("unknown controller line '" + controller + "'");
  }
  const std::string config_line = Line(in, "config line");
  int lines = -1;
  if (std::sscanf(config_line.c_str(), "config %d", &lines) != 1 || lines < 0) {
    throw std::runtime_error("bad config line in checkpoint");
  }
  std::string text;
  for (int i = 0; i < lines; ++i) text += Line(in, "config text") + '\n';
  cp.config = ParseConfig(text);

  if (cp.controller == ControllerKind::kLearned) {
    Rng rng(0);
    student::Student s(cp.config.student, rng);
    teacher::TeacherPolicy t(cp.config.teacher, rng);
    ReadInto(in, "policy", s.policy());
    ReadInto(in, "value1", s.value1());
    ReadInto(in, "value2", s.value2());
    ReadInto(in, "clone", s.clone());
    ReadInto(in, "teacher_policy", t.policy());
    ReadInto(in, "teacher_value", t.value());
    cp.student = std::move(s);
    cp.teacher = std::move(t);
  }
  if (Line(in, "end marker") != "end-checkpoint") {
    throw std::runtime_error("checkpoint missing end marker");
  }
  return cp;
}

double EvaluateCheckpoint(const Checkpoint& checkpoint, int episodes) {
  if (checkpoint.controller == ControllerKind::kShortestPath) {
    return EvaluateHardScripted(checkpoint.config.eval_seed, episodes, checkpoint.config.maze);
  }
  return EvaluateHard(*checkpoint.student, checkpoint.config.eval_seed, episodes,
                      checkpoint.config.maze);
}

std::string SerializeLearner(const student::Student& student,
                             const teacher::TeacherPolicy& teacher) {
  std::ostringstream out;
  WriteNets(out, student, teacher);
  return out.str();
}

}  // namespace autodime::harness
