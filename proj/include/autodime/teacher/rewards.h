#ifndef AUTODIME_TEACHER_REWARDS_H_
#define AUTODIME_TEACHER_REWARDS_H_

#include <optional>
#include <span>
#include <string_view>

#include "autodime/nn/mlp.h"
#include "autodime/student/student.h"
#include "autodime/student/trajectory.h"

namespace autodime::teacher {

enum class TeacherRewardKind {
  kValuePredictionError,
  kValueDisagreement,
  kPolicyDisagreement,
  kConstant,
};

// Config spellings: vpe, vd, pd, constant.
std::string_view RewardKindName(TeacherRewardKind kind);
std::optional<TeacherRewardKind> ParseRewardKind(std::string_view name);

// Episode-level teacher rewards: per-timestep terms summed over the episode.

// sum_t |V(s_t) - Vhat(s_t)| with V = values1. Needs targets.
double VpeReward(const student::Trajectory& trajectory);
// sum_t 1/2 |V1(s_t) - V2(s_t)|, the population std of a two-member ensemble.
double VdReward(const student::Trajectory& trajectory);
// sum_t KL(pi1(.|s_t) || pi2(.|s_t)) over the visited observations.
double PdReward(const student::Trajectory& trajectory, const nn::Mlp& policy,
                const nn::Mlp& clone);

double TeacherReward(TeacherRewardKind kind, const student::Trajectory& trajectory,
                     const student::Student& student);

// Mean over students rolled out with the current policy. Throws when no
// student is on-policy.
double AggregateTeacherReward(std::span<const double> rewards, std::span<const bool> on_policy);

}  // namespace autodime::teacher

#endif  // AUTODIME_TEACHER_REWARDS_H_
