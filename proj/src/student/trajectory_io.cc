#include "autodime/student/trajectory.h"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "autodime/error.h"

namespace autodime::student {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ReadNum(std::istream& in) {
  std::string token;
  if (!(in >> token)) throw std::runtime_error("trajectory row too short");
  if (token == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(token, &used);
  if (used != token.size()) throw std::runtime_error("malformed number '" + token + "'");
  return v;
}

}  // namespace

double Trajectory::Return() const {
  double total = 0.0;
  for (double r : rewards) total += r;
  return total;
}

void Trajectory::Validate() const {
  const auto n = actions.size();
  Require(n > 0, "trajectory is empty");
  Require(log_probs.size() == n && rewards.size() == n && values1.size() == n &&
              values2.size() == n && static_cast<std::size_t>(observations.cols()) == n,
          "trajectory arrays differ in length");
  Require(targets.empty() || targets.size() == n, "trajectory targets have wrong length");
  Require(advantages.empty() || advantages.size() == n,
          "trajectory advantages have wrong length");
  for (double lp : log_probs) {
    Require(std::isfinite(lp) && lp <= 0.0, "behavior log-probability must be finite and <= 0");
  }
}

void WriteTrajectory(std::ostream& out, const Trajectory& traj) {
  traj.Validate();
  out << "trajectory v1 length=" << traj.length() << " obs_dim=" << traj.observations.rows()
      << '\n';
  const bool has_targets = !traj.targets.empty();
  const bool has_adv = !traj.advantages.empty();
  for (int t = 0; t < traj.length(); ++t) {
    out << traj.actions[t] << ' ' << Num(traj.log_probs[t]) << ' ' << Num(traj.rewards[t])
        << ' ' << Num(traj.values1[t]) << ' ' << Num(traj.values2[t]) << ' '
        << (has_targets ? Num(traj.targets[t]) : "nan") << ' '
        << (has_adv ? Num(traj.advantages[t]) : "nan");
    for (Eigen::Index d = 0; d < traj.observations.rows(); ++d) {
      out << ' ' << Num(traj.observations(d, t));
    }
    out << '\n';
  }
  out << "end\n";
}

Trajectory ReadTrajectory(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("missing trajectory header");
  int length = 0;
  int obs_dim = 0;
  if (std::sscanf(line.c_str(), "trajectory v1 length=%d obs_dim=%d", &length, &obs_dim) != 2 ||
      length <= 0 || obs_dim <= 0) {
    throw std::runtime_error("bad trajectory header");
  }
  Trajectory traj;
  traj.observations.resize(obs_dim, length);
  std::vector<double> targets;
  std::vector<double> advantages;
  for (int t = 0; t < length; ++t) {
    if (!std::getline(in, line)) throw std::runtime_error("trajectory truncated");
    std::istringstream row(line);
    int action = 0;
    if (!(row >> action)) throw std::runtime_error("bad action");
    traj.actions.push_back(action);
    traj.log_probs.push_back(ReadNum(row));
    traj.rewards.push_back(ReadNum(row));
    traj.values1.push_back(ReadNum(row));
    traj.values2.push_back(ReadNum(row));
    targets.push_back(ReadNum(row));
    advantages.push_back(ReadNum(row));
    for (int d = 0; d < obs_dim; ++d) traj.observations(d, t) = ReadNum(row);
  }
  if (!std::getline(in, line) || line != "end") throw std::runtime_error("missing end marker");
  if (!std::isnan(targets.front())) traj.targets = std::move(targets);
  if (!std::isnan(advantages.front())) traj.advantages = std::move(advantages);
  traj.Validate();
  return traj;
}

}  // namespace autodime::student
