#include "autodime/student/losses.h"

#include <algorithm>
#include <cmath>

#include "autodime/error.h"

namespace autodime::student {

SurrogateLoss PpoPolicyLoss(std::span<const double> new_logp,
                            std::span<const double> old_logp,
                            std::span<const double> advantages, const PpoConfig& config) {
  const std::size_t n = new_logp.size();
  Require(old_logp.size() == n && advantages.size() == n,
          "policy loss inputs differ in length");
  Require(n > 0, "policy loss needs at least one element");
  Require(config.clip_epsilon > 0.0, "clip epsilon must be positive");
  SurrogateLoss out;
  out.grad_new_logp = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  const double lo = 1.0 - config.clip_epsilon;
  const double hi = 1.0 + config.clip_epsilon;
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    Require(std::isfinite(new_logp[t]) && std::isfinite(old_logp[t]) &&
                std::isfinite(advantages[t]),
            "non-finite policy loss input");
    const double ratio = std::exp(new_logp[t] - old_logp[t]);
    const double unclipped = ratio * advantages[t];
    const double clipped = std::clamp(ratio, lo, hi) * advantages[t];
    if (unclipped <= clipped) {
      total += unclipped;
      out.grad_new_logp(static_cast<Eigen::Index>(t)) = -unclipped / static_cast<double>(n);
    } else {
      total += clipped;
    }
  }
  out.loss = -total / static_cast<double>(n);
  return out;
}

double ValueLoss(const std::vector<std::vector<double>>& predictions,
                 std::span<const double> targets) {
  Require(!predictions.empty(), "value loss needs at least one ensemble member");
  Require(!targets.empty(), "value loss needs at least one target");
  double loss = 0.0;
  for (const auto& member : predictions) {
    Require(member.size() == targets.size(), "value predictions and targets differ in length");
    double sq = 0.0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const double d = member[t] - targets[t];
      sq += d * d;
    }
    loss += sq / static_cast<double>(targets.size());
  }
  return loss;
}

std::vector<double> NormalizeAdvantages(std::span<const double> advantages) {
  std::vector<double> out(advantages.begin(), advantages.end());
  if (out.empty()) return out;
  double mean = 0.0;
  for (double a : out) mean += a;
  mean /= static_cast<double>(out.size());
  double var = 0.0;
  for (double a : out) var += (a - mean) * (a - mean);
  const double sd = std::sqrt(var / static_cast<double>(out.size()));
  for (double& a : out) {
    a -= mean;
    if (sd > 1e-8) a /= sd;
  }
  return out;
}

}  // namespace autodime::student
