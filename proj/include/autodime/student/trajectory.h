#ifndef AUTODIME_STUDENT_TRAJECTORY_H_
#define AUTODIME_STUDENT_TRAJECTORY_H_

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

namespace autodime::student {

// One fixed-length student episode. Columns of `observations` are timesteps.
// values1/values2 are the two value-ensemble predictions at each visited
// state; targets and advantages are filled by GAE from values1.
struct Trajectory {
  Eigen::MatrixXd observations;
  std::vector<int> actions;
  std::vector<double> log_probs;
  std::vector<double> rewards;
  std::vector<double> values1;
  std::vector<double> values2;
  std::vector<double> targets;
  std::vector<double> advantages;

  int length() const { return static_cast<int>(actions.size()); }
  double Return() const;
  // Throws ContractViolation when per-step arrays disagree in length or a
  // log-probability is positive or non-finite. targets/advantages may be empty.
  void Validate() const;
};

// Record format, version 1 (plain text, %.17g numbers):
//
//   trajectory v1 length=<T> obs_dim=<D>
//   <action> <log_prob> <reward> <v1> <v2> <target> <advantage> <obs_0> ... <obs_{D-1}>
//   ... (T rows)
//   end
//
// Missing targets/advantages are written as nan.
void WriteTrajectory(std::ostream& out, const Trajectory& trajectory);
Trajectory ReadTrajectory(std::istream& in);

}  // namespace autodime::student

#endif  // AUTODIME_STUDENT_TRAJECTORY_H_
