#include "autodime/student/gae.h"

#include "autodime/error.h"

namespace autodime::student {

GaeResult ComputeGae(std::span<const double> rewards, std::span<const double> values,
                     double bootstrap_value, const GaeConfig& config) {
  Require(rewards.size() == values.size(), "rewards and values differ in length");
  Require(config.gamma > 0.0 && config.gamma <= 1.0, "gamma must lie in (0, 1]");
  Require(config.lambda >= 0.0 && config.lambda <= 1.0, "lambda must lie in [0, 1]");
  const std::size_t n = rewards.size();
  GaeResult out;
  out.advantages.assign(n, 0.0);
  out.targets.assign(n, 0.0);
  double next_value = bootstrap_value;
  double running = 0.0;
  for (std::size_t t = n; t-- > 0;) {
    const double delta = rewards[t] + config.gamma * next_value - values[t];
    running = delta + config.gamma * config.lambda * running;
    out.advantages[t] = running;
    out.targets[t] = running + values[t];
    next_value = values[t];
  }
  return out;
}

}  // namespace autodime::student
