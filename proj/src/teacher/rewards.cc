#include "autodime/teacher/rewards.h"

#include <cmath>

#include "autodime/error.h"
#include "autodime/student/categorical.h"

namespace autodime::teacher {

std::string_view RewardKindName(TeacherRewardKind kind) {
  switch (kind) {
    case TeacherRewardKind::kValuePredictionError:
      return "vpe";
    case TeacherRewardKind::kValueDisagreement:
      return "vd";
    case TeacherRewardKind::kPolicyDisagreement:
      return "pd";
    case TeacherRewardKind::kConstant:
      return "constant";
  }
  return "?";
}

std::optional<TeacherRewardKind> ParseRewardKind(std::string_view name) {
  for (auto kind : {TeacherRewardKind::kValuePredictionError,
                    TeacherRewardKind::kValueDisagreement,
                    TeacherRewardKind::kPolicyDisagreement, TeacherRewardKind::kConstant}) {
    if (RewardKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

double VpeReward(const student::Trajectory& trajectory) {
  Require(trajectory.targets.size() == trajectory.values1.size(),
          "value prediction error needs value targets");
  double total = 0.0;
  for (std::size_t t = 0; t < trajectory.values1.size(); ++t) {
    total += std::abs(trajectory.values1[t] - trajectory.targets[t]);
  }
  return total;
}

double VdReward(const student::Trajectory& trajectory) {
  Require(trajectory.values1.size() == trajectory.values2.size(),
          "value disagreement needs both ensemble members");
  double total = 0.0;
  for (std::size_t t = 0; t < trajectory.values1.size(); ++t) {
    total += 0.5 * std::abs(trajectory.values1[t] - trajectory.values2[t]);
  }
  return total;
}

double PdReward(const student::Trajectory& trajectory, const nn::Mlp& policy,
                const nn::Mlp& clone) {
  if (trajectory.observations.cols() == 0) return 0.0;
  const Eigen::VectorXd kl =
      student::CategoricalKl(policy.ForwardBatch(trajectory.observations),
                             clone.ForwardBatch(trajectory.observations));
  // Floating-point cancellation can leave tiny negatives; KL itself is >= 0.
  return kl.cwiseMax(0.0).sum();
}

double TeacherReward(TeacherRewardKind kind, const student::Trajectory& trajectory,
                     const student::Student& student) {
  switch (kind) {
    case TeacherRewardKind::kValuePredictionError:
      return VpeReward(trajectory);
    case TeacherRewardKind::kValueDisagreement:
      return VdReward(trajectory);
    case TeacherRewardKind::kPolicyDisagreement:
      return PdReward(trajectory, student.policy(), student.clone());
    case TeacherRewardKind::kConstant:
      return 1.0;
  }
  return 0.0;
}

double AggregateTeacherReward(std::span<const double> rewards, std::span<const bool> on_policy) {
  Require(rewards.size() == on_policy.size(), "one on-policy flag per student is required");
  double total = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    if (!on_policy[i]) continue;
    total += rewards[i];
    ++count;
  }
  Require(count > 0, "no on-policy student to average over");
  return total / count;
}

}  // namespace autodime::teacher
