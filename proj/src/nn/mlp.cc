#include "autodime/nn/mlp.h"

#include <string>

#include "autodime/error.h"

namespace autodime::nn {

Mlp::Mlp(std::vector<int> layer_dims) : layer_dims_(std::move(layer_dims)) {
  Require(layer_dims_.size() >= 2, "Mlp needs at least input and output dims");
  for (int d : layer_dims_) Require(d > 0, "Mlp layer dims must be positive");
  layers_.resize(layer_dims_.size() - 1);
  for (std::size_t l = 0; l + 1 < layer_dims_.size(); ++l) {
    layers_[l].weight = Eigen::MatrixXd::Zero(layer_dims_[l + 1], layer_dims_[l]);
    layers_[l].bias = Eigen::VectorXd::Zero(layer_dims_[l + 1]);
  }
}

Mlp Mlp::Random(std::vector<int> layer_dims, Rng& rng, double output_scale) {
  Mlp net(std::move(layer_dims));
  for (std::size_t l = 0; l < net.layers_.size(); ++l) {
    Eigen::MatrixXd& w = net.layers_[l].weight;
    double scale = 1.0 / std::sqrt(static_cast<double>(w.cols()));
    if (l + 1 == net.layers_.size()) scale *= output_scale;
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        w(i, j) = scale * StandardNormal(rng);
      }
    }
  }
  return net;
}

Eigen::VectorXd Mlp::Forward(const Eigen::VectorXd& input) const {
  return ForwardBatch(input);
}

Eigen::MatrixXd Mlp::ForwardBatch(const Eigen::MatrixXd& inputs) const {
  Require(inputs.rows() == input_dim(),
          "Mlp input has " + std::to_string(inputs.rows()) + " rows, expected " +
              std::to_string(input_dim()));
  Eigen::MatrixXd x = inputs;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    Eigen::MatrixXd z = layers_[l].weight * x;
    z.colwise() += layers_[l].bias;
    if (l + 1 < layers_.size()) z = z.array().tanh();
    x = std::move(z);
  }
  return x;
}

ForwardTrace Mlp::Trace(const Eigen::MatrixXd& inputs) const {
  Require(inputs.rows() == input_dim(), "Mlp input dimension mismatch");
  ForwardTrace trace;
  trace.activations.reserve(layers_.size() + 1);
  trace.activations.push_back(inputs);
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    Eigen::MatrixXd z = layers_[l].weight * trace.activations.back();
    z.colwise() += layers_[l].bias;
    if (l + 1 < layers_.size()) z = z.array().tanh();
    trace.activations.push_back(std::move(z));
  }
  return trace;
}

LayerParams Mlp::Backward(const ForwardTrace& trace,
                          const Eigen::MatrixXd& output_grad) const {
  Require(trace.activations.size() == layers_.size() + 1,
          "trace does not belong to this network");
  Require(output_grad.rows() == output_dim() &&
              output_grad.cols() == trace.output().cols(),
          "output gradient shape does not match network output");
  LayerParams grads(layers_.size());
  Eigen::MatrixXd delta = output_grad;
  for (std::size_t l = layers_.size(); l-- > 0;) {
    const Eigen::MatrixXd& in = trace.activations[l];
    grads[l].weight = delta * in.transpose();
    grads[l].bias = delta.rowwise().sum();
    if (l > 0) {
      Eigen::MatrixXd back = layers_[l].weight.transpose() * delta;
      delta = back.array() * (1.0 - in.array().square());
    }
  }
  return grads;
}

LayerParams Mlp::Backward(const Eigen::MatrixXd& inputs,
                          const Eigen::MatrixXd& output_grad) const {
  return Backward(Trace(inputs), output_grad);
}

std::size_t Mlp::ParameterCount() const {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.weight.size() + layer.bias.size();
  return n;
}

std::vector<double> FlattenParams(const LayerParams& params) {
  std::vector<double> out;
  for (const auto& layer : params) {
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
        out.push_back(layer.weight(i, j));
      }
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) out.push_back(layer.bias(i));
  }
  return out;
}

std::vector<double> Mlp::Flatten() const { return FlattenParams(layers_); }

void Mlp::Unflatten(const std::vector<double>& values) {
  Require(values.size() == ParameterCount(), "flat parameter size mismatch");
  std::size_t k = 0;
  for (auto& layer : layers_) {
    for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
        layer.weight(i, j) = values[k++];
      }
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) layer.bias(i) = values[k++];
  }
}

bool Mlp::operator==(const Mlp& other) const {
  if (layer_dims_ != other.layer_dims_) return false;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l].weight != other.layers_[l].weight) return false;
    if (layers_[l].bias != other.layers_[l].bias) return false;
  }
  return true;
}

LayerParams ZerosLike(const LayerParams& params) {
  LayerParams out(params.size());
  for (std::size_t l = 0; l < params.size(); ++l) {
    out[l].weight = Eigen::MatrixXd::Zero(params[l].weight.rows(), params[l].weight.cols());
    out[l].bias = Eigen::VectorXd::Zero(params[l].bias.size());
  }
  return out;
}

void AddScaled(LayerParams& dst, const LayerParams& src, double scale) {
  Require(dst.size() == src.size(), "layer count mismatch");
  for (std::size_t l = 0; l < dst.size(); ++l) {
    dst[l].weight += scale * src[l].weight;
    dst[l].bias += scale * src[l].bias;
  }
}

bool AllFinite(const LayerParams& params) {
  for (const auto& layer : params) {
    if (!layer.weight.allFinite() || !layer.bias.allFinite()) return false;
  }
  return true;
}

}  // namespace autodime::nn
