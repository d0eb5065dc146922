#include "autodime/student/categorical.h"

#include <cmath>

#include "autodime/error.h"

namespace autodime::student {

Eigen::MatrixXd LogSoftmax(const Eigen::MatrixXd& logits) {
  Require(logits.allFinite(), "non-finite logits");
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    const double m = logits.col(j).maxCoeff();
    const double lse = m + std::log((logits.col(j).array() - m).exp().sum());
    out.col(j) = logits.col(j).array() - lse;
  }
  return out;
}

Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits) {
  return LogSoftmax(logits).array().exp();
}

double PolicyEntropy(const Eigen::MatrixXd& logits) {
  const Eigen::MatrixXd logp = LogSoftmax(logits);
  const Eigen::MatrixXd p = logp.array().exp();
  return -(p.array() * logp.array()).sum() / static_cast<double>(logits.cols());
}

Eigen::MatrixXd PolicyEntropyGradient(const Eigen::MatrixXd& logits) {
  // dH/dz_k = -p_k (log p_k + H)
  const Eigen::MatrixXd logp = LogSoftmax(logits);
  const Eigen::MatrixXd p = logp.array().exp();
  Eigen::MatrixXd grad(logits.rows(), logits.cols());
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    const double h = -(p.col(j).array() * logp.col(j).array()).sum();
    grad.col(j) = -p.col(j).array() * (logp.col(j).array() + h);
  }
  return grad / static_cast<double>(logits.cols());
}

Eigen::VectorXd CategoricalKl(const Eigen::MatrixXd& p_logits,
                              const Eigen::MatrixXd& q_logits) {
  Require(p_logits.rows() == q_logits.rows() && p_logits.cols() == q_logits.cols(),
          "KL arguments differ in shape");
  const Eigen::MatrixXd logp = LogSoftmax(p_logits);
  const Eigen::MatrixXd logq = LogSoftmax(q_logits).array().max(std::log(1e-12));
  const Eigen::MatrixXd p = logp.array().exp();
  Eigen::VectorXd kl(p_logits.cols());
  for (Eigen::Index j = 0; j < p_logits.cols(); ++j) {
    kl(j) = (p.col(j).array() * (logp.col(j) - logq.col(j)).array()).sum();
  }
  return kl;
}

int SampleCategorical(Rng& rng, const Eigen::VectorXd& logits) {
  const Eigen::VectorXd p = Softmax(logits);
  double u = UniformDouble(rng);
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    if (u < p(k)) return static_cast<int>(k);
    u -= p(k);
  }
  // Rounding left u just above the total; fall back to the last supported index.
  for (Eigen::Index k = p.size(); k-- > 0;) {
    if (p(k) > 0.0) return static_cast<int>(k);
  }
  return 0;
}

int ArgMax(const Eigen::VectorXd& logits) {
  Eigen::Index best = 0;
  logits.maxCoeff(&best);
  return static_cast<int>(best);
}

}  // namespace autodime::student
