#include "autodime/student/student.h"

#include <algorithm>
#include <numeric>

#include "autodime/error.h"
#include "autodime/student/categorical.h"

namespace autodime::student {
namespace {

std::vector<int> Dims(int in, const std::vector<int>& hidden, int out) {
  std::vector<int> dims = {in};
  dims.insert(dims.end(), hidden.begin(), hidden.end());
  dims.push_back(out);
  return dims;
}

nn::AdamConfig WithRate(double lr) {
  nn::AdamConfig c;
  c.learning_rate = lr;
  return c;
}

void Shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[UniformIndex(rng, i)]);
  }
}

}  // namespace

void FillTargets(Trajectory& trajectory, const GaeConfig& config) {
  GaeResult gae = ComputeGae(trajectory.rewards, trajectory.values1, 0.0, config);
  trajectory.advantages = std::move(gae.advantages);
  trajectory.targets = std::move(gae.targets);
}

Student::Student(const StudentConfig& config, Rng& rng) : config_(config) {
  Require(config.value_scale > 0.0, "value scale must be positive");
  policy_ = nn::Mlp::Random(Dims(config.observation_dim, config.hidden, config.num_actions),
                            rng, config.policy_output_scale);
  value1_ = nn::Mlp::Random(Dims(config.observation_dim, config.hidden, 1), rng);
  value2_ = nn::Mlp::Random(Dims(config.observation_dim, config.hidden, 1), rng);
  clone_ = nn::Mlp::Random(Dims(config.observation_dim, config.hidden, config.num_actions),
                           rng, config.policy_output_scale);
  policy_opt_ = nn::AdamState(policy_, WithRate(config.policy_learning_rate));
  value1_opt_ = nn::AdamState(value1_, WithRate(config.value_learning_rate));
  value2_opt_ = nn::AdamState(value2_, WithRate(config.value_learning_rate));
  clone_opt_ = nn::AdamState(clone_, WithRate(config.clone_learning_rate));
}

Eigen::MatrixXd Student::PolicyLogits(const Eigen::MatrixXd& observations) const {
  return policy_.ForwardBatch(observations);
}

Eigen::MatrixXd Student::CloneLogits(const Eigen::MatrixXd& observations) const {
  return clone_.ForwardBatch(observations);
}

Eigen::VectorXd Student::Values1(const Eigen::MatrixXd& observations) const {
  return config_.value_scale * value1_.ForwardBatch(observations).row(0).transpose();
}

Eigen::VectorXd Student::Values2(const Eigen::MatrixXd& observations) const {
  return config_.value_scale * value2_.ForwardBatch(observations).row(0).transpose();
}

ActBatch Student::Act(const Eigen::MatrixXd& observations, Rng& rng, bool greedy) const {
  const Eigen::MatrixXd logits = PolicyLogits(observations);
  const Eigen::MatrixXd logp = LogSoftmax(logits);
  ActBatch out;
  out.actions.reserve(observations.cols());
  out.log_probs.reserve(observations.cols());
  for (Eigen::Index j = 0; j < observations.cols(); ++j) {
    const int a = greedy ? ArgMax(logits.col(j)) : SampleCategorical(rng, logits.col(j));
    out.actions.push_back(a);
    out.log_probs.push_back(std::min(0.0, logp(a, j)));
  }
  return out;
}

double Student::CloneUpdate(const Eigen::MatrixXd& observations) {
  Require(observations.cols() > 0, "clone update needs observations");
  const Eigen::MatrixXd target_logits = PolicyLogits(observations);
  const nn::ForwardTrace trace = clone_.Trace(observations);
  const Eigen::VectorXd kl = CategoricalKl(target_logits, trace.output());
  // d KL(p || q) / d q_logits = q - p
  const Eigen::MatrixXd grad =
      (Softmax(trace.output()) - Softmax(target_logits)) / static_cast<double>(observations.cols());
  clone_opt_.Step(clone_, clone_.Backward(trace, grad));
  return kl.mean();
}

void Student::ValueStep(nn::Mlp& net, nn::AdamState& opt, const Eigen::MatrixXd& obs,
                        const Eigen::VectorXd& targets, double& loss) {
  const nn::ForwardTrace trace = net.Trace(obs);
  const Eigen::VectorXd pred = config_.value_scale * trace.output().row(0).transpose();
  const Eigen::VectorXd diff = pred - targets;
  const double n = static_cast<double>(targets.size());
  loss += diff.squaredNorm() / n;
  Eigen::MatrixXd grad =
      (config_.ppo.value_coef * 2.0 * config_.value_scale / n) * diff.transpose();
  opt.Step(net, net.Backward(trace, grad));
}

void Student::MinibatchStep(const std::vector<const Trajectory*>& episodes,
                            const std::vector<std::vector<double>>& advantages,
                            const std::vector<int>& episode_ids, StudentUpdateStats& stats) {
  int total = 0;
  for (int e : episode_ids) total += episodes[e]->length();
  Eigen::MatrixXd obs(config_.observation_dim, total);
  Eigen::VectorXd targets(total);
  std::vector<int> actions(total);
  std::vector<double> old_logp(total);
  std::vector<double> adv(total);
  int k = 0;
  for (int e : episode_ids) {
    const Trajectory& traj = *episodes[e];
    for (int t = 0; t < traj.length(); ++t, ++k) {
      obs.col(k) = traj.observations.col(t);
      targets(k) = traj.targets[t];
      actions[k] = traj.actions[t];
      old_logp[k] = traj.log_probs[t];
      adv[k] = advantages[e][t];
    }
  }

  const nn::ForwardTrace trace = policy_.Trace(obs);
  const Eigen::MatrixXd& logits = trace.output();
  const Eigen::MatrixXd logp_all = LogSoftmax(logits);
  std::vector<double> new_logp(total);
  for (int j = 0; j < total; ++j) new_logp[j] = logp_all(actions[j], j);
  const SurrogateLoss surrogate = PpoPolicyLoss(new_logp, old_logp, adv, config_.ppo);
  const double entropy = PolicyEntropy(logits);

  // d logp_a / d z = onehot(a) - softmax(z)
  Eigen::MatrixXd grad = -logp_all.array().exp();
  for (int j = 0; j < total; ++j) grad(actions[j], j) += 1.0;
  grad = grad * surrogate.grad_new_logp.asDiagonal();
  grad -= config_.ppo.entropy_coef * PolicyEntropyGradient(logits);
  policy_opt_.Step(policy_, policy_.Backward(trace, grad));

  double value_loss = 0.0;
  ValueStep(value1_, value1_opt_, obs, targets, value_loss);
  ValueStep(value2_, value2_opt_, obs, targets, value_loss);

  stats.policy_loss += surrogate.loss;
  stats.value_loss += value_loss;
  stats.entropy += entropy;
}

StudentUpdateStats Student::Update(std::vector<Trajectory>& batch, Rng& rng) {
  Require(!batch.empty(), "student update needs at least one trajectory");
  std::vector<const Trajectory*> episodes;
  for (Trajectory& traj : batch) {
    traj.Validate();
    Require(traj.observations.rows() == config_.observation_dim,
            "trajectory observation size does not match the student");
    FillTargets(traj, config_.gae);
    episodes.push_back(&traj);
  }

  // Advantage normalization is per batch, over every timestep.
  std::vector<std::vector<double>> advantages;
  if (config_.ppo.normalize_advantages) {
    std::vector<double> flat;
    for (const auto* traj : episodes) {
      flat.insert(flat.end(), traj->advantages.begin(), traj->advantages.end());
    }
    const std::vector<double> normalized = NormalizeAdvantages(flat);
    std::size_t k = 0;
    for (const auto* traj : episodes) {
      advantages.emplace_back(normalized.begin() + static_cast<long>(k),
                              normalized.begin() + static_cast<long>(k + traj->advantages.size()));
      k += traj->advantages.size();
    }
  } else {
    for (const auto* traj : episodes) advantages.push_back(traj->advantages);
  }

  const int num_episodes = static_cast<int>(episodes.size());
  const int per_batch = config_.ppo.minibatch_episodes > 0
                            ? std::min(config_.ppo.minibatch_episodes, num_episodes)
                            : num_episodes;
  std::vector<int> order(num_episodes);
  std::iota(order.begin(), order.end(), 0);

  StudentUpdateStats stats;
  int steps = 0;
  for (int epoch = 0; epoch < config_.ppo.epochs; ++epoch) {
    Shuffle(order, rng);
    for (int start = 0; start < num_episodes; start += per_batch) {
      const std::vector<int> ids(order.begin() + start,
                                 order.begin() + std::min(start + per_batch, num_episodes));
      MinibatchStep(episodes, advantages, ids, stats);
      ++steps;
    }
  }
  if (steps > 0) {
    stats.policy_loss /= steps;
    stats.value_loss /= steps;
    stats.entropy /= steps;
  }

  int clone_steps = 0;
  for (int start = 0; start < num_episodes; start += per_batch) {
    int total = 0;
    const int stop = std::min(start + per_batch, num_episodes);
    for (int i = start; i < stop; ++i) total += episodes[order[i]]->length();
    Eigen::MatrixXd obs(config_.observation_dim, total);
    int k = 0;
    for (int i = start; i < stop; ++i) {
      const Trajectory& traj = *episodes[order[i]];
      obs.middleCols(k, traj.length()) = traj.observations;
      k += traj.length();
    }
    stats.clone_kl += CloneUpdate(obs);
    ++clone_steps;
  }
  stats.clone_kl /= clone_steps;
  return stats;
}

}  // namespace autodime::student
