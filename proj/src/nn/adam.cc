#include "autodime/nn/adam.h"

#include <cmath>

#include "autodime/error.h"

namespace autodime::nn {

AdamState::AdamState(const Mlp& net, AdamConfig config)
    : config_(config),
      first_moment_(ZerosLike(net.layers())),
      second_moment_(ZerosLike(net.layers())) {
  Require(config_.learning_rate > 0.0, "learning rate must be positive");
}

void AdamState::Step(Mlp& net, const LayerParams& grads) {
  LayerParams& params = net.layers();
  Require(grads.size() == params.size() && first_moment_.size() == params.size(),
          "optimizer state does not match network");
  for (std::size_t l = 0; l < params.size(); ++l) {
    Require(grads[l].weight.rows() == params[l].weight.rows() &&
                grads[l].weight.cols() == params[l].weight.cols() &&
                grads[l].bias.size() == params[l].bias.size(),
            "gradient shape mismatch at layer " + std::to_string(l));
  }
  Require(AllFinite(grads), "non-finite gradient");

  ++step_count_;
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  const double correction1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
  const double correction2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
  const double step_size = config_.learning_rate / correction1;
  const double eps = config_.epsilon;
  auto update = [&](auto& param, const auto& grad, auto& m, auto& v) {
    m = b1 * m + (1.0 - b1) * grad;
    v = b2 * v + (1.0 - b2) * grad.cwiseProduct(grad);
    param.array() -=
        step_size * m.array() / ((v.array() / correction2).sqrt() + eps);
  };
  for (std::size_t l = 0; l < params.size(); ++l) {
    update(params[l].weight, grads[l].weight, first_moment_[l].weight,
           second_moment_[l].weight);
    update(params[l].bias, grads[l].bias, first_moment_[l].bias,
           second_moment_[l].bias);
  }
}

}  // namespace autodime::nn
