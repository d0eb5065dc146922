#ifndef AUTODIME_STUDENT_LOSSES_H_
#define AUTODIME_STUDENT_LOSSES_H_

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace autodime::student {

struct PpoConfig {
  double clip_epsilon = 0.2;
  double entropy_coef = 0.01;
  int epochs = 4;
  // Episodes per minibatch; 0 means the whole batch.
  int minibatch_episodes = 16;
  double value_coef = 0.5;
  bool normalize_advantages = true;
};

struct SurrogateLoss {
  double loss = 0.0;
  // d loss / d new_logp, per element.
  Eigen::VectorXd grad_new_logp;
};

// Clipped surrogate: mean_t -min(rho_t A_t, clip(rho_t, 1-eps, 1+eps) A_t)
// with rho_t = exp(new_logp_t - old_logp_t). old_logp carries no gradient.
SurrogateLoss PpoPolicyLoss(std::span<const double> new_logp,
                            std::span<const double> old_logp,
                            std::span<const double> advantages, const PpoConfig& config);

// Sum over ensemble members of the mean squared error to the shared targets.
double ValueLoss(const std::vector<std::vector<double>>& predictions,
                 std::span<const double> targets);

// Mean/std normalization with population std; a degenerate batch (std below
// 1e-8) is only centered.
std::vector<double> NormalizeAdvantages(std::span<const double> advantages);

}  // namespace autodime::student

#endif  // AUTODIME_STUDENT_LOSSES_H_
