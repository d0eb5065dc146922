#include "autodime/teacher/teacher_policy.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "autodime/error.h"

namespace autodime::teacher {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<int> Dims(int in, const std::vector<int>& hidden, int out) {
  std::vector<int> dims = {in};
  dims.insert(dims.end(), hidden.begin(), hidden.end());
  dims.push_back(out);
  return dims;
}

// Log-softmax restricted to allowed entries; masked entries are -inf.
Eigen::VectorXd MaskedLogSoftmax(const Eigen::Ref<const Eigen::VectorXd>& logits,
                                 const std::vector<std::uint8_t>& allowed) {
  Require(static_cast<Eigen::Index>(allowed.size()) == logits.size(), "mask size mismatch");
  double m = kNegInf;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    if (allowed[i]) m = std::max(m, logits(i));
  }
  Require(m > kNegInf, "every cell is masked for a placed object");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    if (allowed[i]) sum += std::exp(logits(i) - m);
  }
  const double lse = m + std::log(sum);
  Eigen::VectorXd out(logits.size());
  for (Eigen::Index i = 0; i < logits.size(); ++i) {
    out(i) = allowed[i] ? logits(i) - lse : kNegInf;
  }
  return out;
}

int SampleFromLogProbs(Rng& rng, const Eigen::VectorXd& logp) {
  double u = UniformDouble(rng);
  int last = -1;
  for (Eigen::Index i = 0; i < logp.size(); ++i) {
    if (logp(i) == kNegInf) continue;
    const double p = std::exp(logp(i));
    last = static_cast<int>(i);
    if (u < p) return last;
    u -= p;
  }
  return last;
}

void Shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[UniformIndex(rng, i)]);
}

}  // namespace

SpawnMask SpawnMask::AllowAll(int cells) {
  SpawnMask mask;
  for (auto& m : mask.allowed) m.assign(cells, 1);
  return mask;
}

double MaskedEntropy(const Eigen::VectorXd& logits, const std::vector<std::uint8_t>& allowed) {
  const Eigen::VectorXd logp = MaskedLogSoftmax(logits, allowed);
  double h = 0.0;
  for (Eigen::Index i = 0; i < logp.size(); ++i) {
    if (allowed[i]) h -= std::exp(logp(i)) * logp(i);
  }
  return h;
}

maze::Cell ResolveCollision(maze::Cell proposed, std::span<const maze::Cell> occupied,
                            const maze::MazeLayout& layout) {
  auto taken = [&](maze::Cell c) {
    for (const maze::Cell& o : occupied) {
      if (o == c) return true;
    }
    return false;
  };
  Require(layout.InBounds(proposed), "proposed cell is outside the maze");
  if (!taken(proposed)) return proposed;
  int best = -1;
  int best_dist = std::numeric_limits<int>::max();
  for (int i = 0; i < layout.cell_count(); ++i) {
    const maze::Cell c = layout.CellAt(i);
    if (taken(c)) continue;
    const int d = maze::ChebyshevDistance(c, proposed);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  Require(best >= 0, "no free cell left for collision resolution");
  return layout.CellAt(best);
}

TeacherPolicy::TeacherPolicy(const TeacherConfig& config, Rng& rng) : config_(config) {
  Require(config.height > 0 && config.width > 0, "teacher grid must be non-empty");
  policy_ = nn::Mlp::Random(Dims(observation_dim(), config.hidden, kNumPlacedObjects * cells()),
                            rng, config.policy_output_scale);
  value_ = nn::Mlp::Random(Dims(observation_dim(), config.value_hidden, 1), rng);
  nn::AdamConfig pc;
  pc.learning_rate = config.learning_rate;
  nn::AdamConfig vc;
  vc.learning_rate = config.value_learning_rate;
  policy_opt_ = nn::AdamState(policy_, pc);
  value_opt_ = nn::AdamState(value_, vc);
}

std::array<Eigen::VectorXd, kNumPlacedObjects> TeacherPolicy::LogProbabilities(
    const Eigen::VectorXd& observation, const SpawnMask& mask) const {
  const Eigen::VectorXd logits = policy_.Forward(observation);
  std::array<Eigen::VectorXd, kNumPlacedObjects> out;
  for (int o = 0; o < kNumPlacedObjects; ++o) {
    out[o] = MaskedLogSoftmax(logits.segment(o * cells(), cells()), mask.allowed[o]);
  }
  return out;
}

double TeacherPolicy::Value(const Eigen::VectorXd& observation) const {
  return value_.Forward(observation)(0);
}

TeacherAction TeacherPolicy::Act(const Eigen::VectorXd& observation,
                                 const maze::MazeLayout& layout, const SpawnMask& mask,
                                 Rng& rng) const {
  Require(layout.cell_count() == cells(), "layout size does not match the teacher");
  const auto logp = LogProbabilities(observation, mask);
  TeacherAction action;
  std::array<maze::Cell, kNumPlacedObjects> placed;
  for (int o = 0; o < kNumPlacedObjects; ++o) {
    const int cell = SampleFromLogProbs(rng, logp[o]);
    action.proposed[o] = cell;
    action.log_prob += logp[o](cell);
  }
  for (int o = 0; o < kNumPlacedObjects; ++o) {
    placed[o] = ResolveCollision(layout.CellAt(action.proposed[o]),
                                 std::span<const maze::Cell>(placed.data(), o), layout);
  }
  action.spawn = {placed[kAgentObject], placed[kBoxObject], placed[kRampObject]};
  action.value = Value(observation);
  return action;
}

TeacherUpdateStats TeacherPolicy::Update(std::vector<TeacherTransition> batch, Rng& rng) {
  Require(!batch.empty(), "teacher update needs at least one transition");
  for (const auto& tr : batch) {
    Require(std::isfinite(tr.reward), "non-finite teacher reward");
    Require(tr.observation.size() == observation_dim(), "teacher observation size mismatch");
  }
  const int n = static_cast<int>(batch.size());

  if (config_.normalize_rewards) {
    for (const auto& tr : batch) {
      ++reward_count_;
      const double delta = tr.reward - reward_mean_;
      reward_mean_ += delta / static_cast<double>(reward_count_);
      reward_m2_ += delta * (tr.reward - reward_mean_);
    }
    const double var =
        reward_count_ > 1 ? reward_m2_ / static_cast<double>(reward_count_ - 1) : 1.0;
    const double sd = std::sqrt(std::max(var, 1e-12));
    for (auto& tr : batch) tr.reward = (tr.reward - reward_mean_) / sd;
  }

  std::vector<double> raw_adv(n);
  for (int i = 0; i < n; ++i) raw_adv[i] = batch[i].reward - batch[i].value;
  const std::vector<double> advantages =
      config_.ppo.normalize_advantages ? student::NormalizeAdvantages(raw_adv) : raw_adv;

  const int per_batch =
      config_.ppo.minibatch_episodes > 0 ? std::min(config_.ppo.minibatch_episodes, n) : n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  TeacherUpdateStats stats;
  int steps = 0;
  const int c = cells();
  for (int epoch = 0; epoch < config_.ppo.epochs; ++epoch) {
    Shuffle(order, rng);
    for (int start = 0; start < n; start += per_batch) {
      const int stop = std::min(start + per_batch, n);
      const int m = stop - start;
      Eigen::MatrixXd obs(observation_dim(), m);
      Eigen::VectorXd rewards(m);
      for (int k = 0; k < m; ++k) {
        obs.col(k) = batch[order[start + k]].observation;
        rewards(k) = batch[order[start + k]].reward;
      }
      const nn::ForwardTrace trace = policy_.Trace(obs);
      const Eigen::MatrixXd& logits = trace.output();

      std::vector<double> new_logp(m, 0.0);
      std::vector<double> old_logp(m);
      std::vector<double> adv(m);
      std::vector<std::array<Eigen::VectorXd, kNumPlacedObjects>> logps(m);
      double entropy = 0.0;
      for (int k = 0; k < m; ++k) {
        const TeacherTransition& tr = batch[order[start + k]];
        old_logp[k] = tr.log_prob;
        adv[k] = advantages[order[start + k]];
        for (int o = 0; o < kNumPlacedObjects; ++o) {
          logps[k][o] = MaskedLogSoftmax(logits.col(k).segment(o * c, c), tr.mask.allowed[o]);
          new_logp[k] += logps[k][o](tr.proposed[o]);
          for (int i = 0; i < c; ++i) {
            if (tr.mask.allowed[o][i]) entropy -= std::exp(logps[k][o](i)) * logps[k][o](i);
          }
        }
      }
      entropy /= m;
      const student::SurrogateLoss surrogate =
          student::PpoPolicyLoss(new_logp, old_logp, adv, config_.ppo);

      Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(logits.rows(), m);
      for (int k = 0; k < m; ++k) {
        const TeacherTransition& tr = batch[order[start + k]];
        const double g = surrogate.grad_new_logp(k);
        for (int o = 0; o < kNumPlacedObjects; ++o) {
          const Eigen::VectorXd& lp = logps[k][o];
          double h = 0.0;
          for (int i = 0; i < c; ++i) {
            if (tr.mask.allowed[o][i]) h -= std::exp(lp(i)) * lp(i);
          }
          for (int i = 0; i < c; ++i) {
            if (!tr.mask.allowed[o][i]) continue;
            const double p = std::exp(lp(i));
            // Surrogate term: g * (onehot - p); entropy term: -coef * dH/dz / m.
            double d = -g * p;
            if (i == tr.proposed[o]) d += g;
            d += config_.ppo.entropy_coef * p * (lp(i) + h) / m;
            grad(o * c + i, k) = d;
          }
        }
      }
      policy_opt_.Step(policy_, policy_.Backward(trace, grad));

      const nn::ForwardTrace vtrace = value_.Trace(obs);
      const Eigen::VectorXd diff = vtrace.output().row(0).transpose() - rewards;
      const Eigen::MatrixXd vgrad = (config_.ppo.value_coef * 2.0 / m) * diff.transpose();
      value_opt_.Step(value_, value_.Backward(vtrace, vgrad));

      stats.policy_loss += surrogate.loss;
      stats.value_loss += diff.squaredNorm() / m;
      stats.entropy += entropy;
      ++steps;
    }
  }
  if (steps > 0) {
    stats.policy_loss /= steps;
    stats.value_loss /= steps;
    stats.entropy /= steps;
  }
  return stats;
}

}  // namespace autodime::teacher
