#ifndef AUTODIME_STUDENT_GAE_H_
#define AUTODIME_STUDENT_GAE_H_

#include <span>
#include <vector>

namespace autodime::student {

struct GaeConfig {
  double gamma = 0.99;
  double lambda = 0.95;
};

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> targets;  // advantages + values
};

// Generalized advantage estimation over one episode of length T, computed by
// the backward recursion A_t = delta_t + gamma * lambda * A_{t+1}. The value
// after the last step is `bootstrap_value` (0 for terminal episodes).
GaeResult ComputeGae(std::span<const double> rewards, std::span<const double> values,
                     double bootstrap_value, const GaeConfig& config);

}  // namespace autodime::student

#endif  // AUTODIME_STUDENT_GAE_H_
