#ifndef AUTODIME_NN_MLP_H_
#define AUTODIME_NN_MLP_H_

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "autodime/random.h"

namespace autodime::nn {

struct DenseLayer {
  Eigen::MatrixXd weight;  // out x in
  Eigen::VectorXd bias;    // out
};

// Parameters or gradients of an Mlp, one entry per layer.
using LayerParams = std::vector<DenseLayer>;

// Activations recorded by a batched forward pass. activations[0] is the input
// batch, activations.back() the output; samples are columns.
struct ForwardTrace {
  std::vector<Eigen::MatrixXd> activations;
  const Eigen::MatrixXd& output() const { return activations.back(); }
};

// Fully connected network with tanh hidden layers and a linear output layer.
class Mlp {
 public:
  Mlp() = default;
  // Builds a network with all-zero parameters.
  explicit Mlp(std::vector<int> layer_dims);

  // Scaled Gaussian initialization: weights ~ N(0, 1/fan_in), zero biases.
  // The output layer is additionally multiplied by output_scale.
  static Mlp Random(std::vector<int> layer_dims, Rng& rng,
                    double output_scale = 1.0);

  Eigen::VectorXd Forward(const Eigen::VectorXd& input) const;
  Eigen::MatrixXd ForwardBatch(const Eigen::MatrixXd& inputs) const;
  ForwardTrace Trace(const Eigen::MatrixXd& inputs) const;

  // Gradient of a scalar loss with respect to every parameter, given the
  // loss gradient at the output (one column per sample, summed over samples).
  LayerParams Backward(const ForwardTrace& trace,
                       const Eigen::MatrixXd& output_grad) const;
  LayerParams Backward(const Eigen::MatrixXd& inputs,
                       const Eigen::MatrixXd& output_grad) const;

  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int input_dim() const { return layer_dims_.front(); }
  int output_dim() const { return layer_dims_.back(); }

  LayerParams& layers() { return layers_; }
  const LayerParams& layers() const { return layers_; }

  std::size_t ParameterCount() const;

  // Row-major flattening over layers (weight then bias), used by gradient
  // checks and hashing.
  std::vector<double> Flatten() const;
  void Unflatten(const std::vector<double>& values);

  bool operator==(const Mlp& other) const;

 private:
  std::vector<int> layer_dims_;
  LayerParams layers_;
};

LayerParams ZerosLike(const LayerParams& params);
void AddScaled(LayerParams& dst, const LayerParams& src, double scale);
bool AllFinite(const LayerParams& params);
std::vector<double> FlattenParams(const LayerParams& params);

}  // namespace autodime::nn

#endif  // AUTODIME_NN_MLP_H_
