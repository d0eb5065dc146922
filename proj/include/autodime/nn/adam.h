#ifndef AUTODIME_NN_ADAM_H_
#define AUTODIME_NN_ADAM_H_

#include <cstdint>

#include "autodime/nn/mlp.h"

namespace autodime::nn {

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Moment accumulators for one network. Shapes mirror the network parameters.
class AdamState {
 public:
  AdamState() = default;
  AdamState(const Mlp& net, AdamConfig config);

  const AdamConfig& config() const { return config_; }
  AdamConfig& config() { return config_; }
  std::int64_t step_count() const { return step_count_; }
  const LayerParams& first_moment() const { return first_moment_; }
  const LayerParams& second_moment() const { return second_moment_; }

  // Bias-corrected adaptive-moment update of `net` in place. Throws
  // ContractViolation on shape mismatch or any non-finite gradient entry; in
  // that case neither the network nor the state is touched.
  void Step(Mlp& net, const LayerParams& grads);

 private:
  AdamConfig config_;
  LayerParams first_moment_;
  LayerParams second_moment_;
  std::int64_t step_count_ = 0;
};

}  // namespace autodime::nn

#endif  // AUTODIME_NN_ADAM_H_
