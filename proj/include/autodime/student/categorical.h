#ifndef AUTODIME_STUDENT_CATEGORICAL_H_
#define AUTODIME_STUDENT_CATEGORICAL_H_

#include <Eigen/Dense>

#include "autodime/random.h"

namespace autodime::student {

// Column-wise operations on logits (one distribution per column).
Eigen::MatrixXd LogSoftmax(const Eigen::MatrixXd& logits);
Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits);

// Mean Shannon entropy over columns.
double PolicyEntropy(const Eigen::MatrixXd& logits);
// Gradient of the mean entropy with respect to the logits.
Eigen::MatrixXd PolicyEntropyGradient(const Eigen::MatrixXd& logits);

// KL(p || q) for each column pair, q floored at 1e-12.
Eigen::VectorXd CategoricalKl(const Eigen::MatrixXd& p_logits,
                              const Eigen::MatrixXd& q_logits);

int SampleCategorical(Rng& rng, const Eigen::VectorXd& logits);
int ArgMax(const Eigen::VectorXd& logits);

}  // namespace autodime::student

#endif  // AUTODIME_STUDENT_CATEGORICAL_H_
