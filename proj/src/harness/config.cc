#include "autodime/harness/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <type_traits>
#include <sstream>
#include <vector>

namespace autodime::harness {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string FormatDouble(double v) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

double ToDouble(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("invalid number for " + key + ": '" + v + "'");
}

long long ToInt(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used == v.size()) return i;
  } catch (const std::exception&) {
  }
  throw ConfigError("invalid integer for " + key + ": '" + v + "'");
}

std::uint64_t ToUnsigned(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v[0] != '-') {
      const unsigned long long i = std::stoull(v, &used);
      if (used == v.size()) return i;
    }
  } catch (const std::exception&) {
  }
  throw ConfigError("invalid unsigned integer for " + key + ": '" + v + "'");
}

bool ToBool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

std::vector<int> ToDims(const std::string& key, const std::string& v) {
  std::vector<int> dims;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const long long d = ToInt(key, Trim(part));
    if (d <= 0) throw ConfigError("layer sizes must be positive in " + key);
    dims.push_back(static_cast<int>(d));
  }
  if (dims.empty()) throw ConfigError("empty layer list for " + key);
  return dims;
}

std::string FormatDims(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  return out;
}

struct Field {
  std::string key;
  std::function<std::string(const ExperimentConfig&)> get;
  std::function<void(ExperimentConfig&, const std::string&)> set;
};

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = [] {
    std::vector<Field> f;
    auto add = [&](std::string key, auto get, auto set) {
      f.push_back({std::move(key), get, set});
    };
    auto add_int = [&](std::string key, auto accessor) {
      add(key, [accessor](const ExperimentConfig& c) {
            return std::to_string(accessor(const_cast<ExperimentConfig&>(c)));
          },
          [accessor, key](ExperimentConfig& c, const std::string& v) {
            accessor(c) = static_cast<std::remove_reference_t<decltype(accessor(c))>>(ToInt(key, v));
          });
    };
    auto add_double = [&](std::string key, auto accessor) {
      add(key, [accessor](const ExperimentConfig& c) {
            return FormatDouble(accessor(const_cast<ExperimentConfig&>(c)));
          },
          [accessor, key](ExperimentConfig& c, const std::string& v) { accessor(c) = ToDouble(key, v); });
    };
    auto add_bool = [&](std::string key, auto accessor) {
      add(key, [accessor](const ExperimentConfig& c) {
            return std::string(accessor(const_cast<ExperimentConfig&>(c)) ? "true" : "false");
          },
          [accessor, key](ExperimentConfig& c, const std::string& v) { accessor(c) = ToBool(key, v); });
    };
    auto add_dims = [&](std::string key, auto accessor) {
      add(key, [accessor](const ExperimentConfig& c) {
            return FormatDims(accessor(const_cast<ExperimentConfig&>(c)));
          },
          [accessor, key](ExperimentConfig& c, const std::string& v) { accessor(c) = ToDims(key, v); });
    };

    add("experiment.seed", [](const ExperimentConfig& c) { return std::to_string(c.seed); },
        [](ExperimentConfig& c, const std::string& v) { c.seed = ToUnsigned("experiment.seed", v); });
    add_int("experiment.iterations", [](ExperimentConfig& c) -> int& { return c.iterations; });
    add_int("experiment.episodes_per_iteration",
            [](ExperimentConfig& c) -> int& { return c.episodes_per_iteration; });
    add("experiment.sampler",
        [](const ExperimentConfig& c) {
          return std::string(c.sampler == SpawnSampler::kTeacher ? "teacher" : "uniform");
        },
        [](ExperimentConfig& c, const std::string& v) {
          if (v == "teacher") {
            c.sampler = SpawnSampler::kTeacher;
          } else if (v == "uniform") {
            c.sampler = SpawnSampler::kUniform;
          } else {
            throw ConfigError("invalid value for experiment.sampler: '" + v + "'");
          }
        });
    add_int("experiment.eval_every", [](ExperimentConfig& c) -> int& { return c.eval_every; });
    add_int("experiment.eval_episodes", [](ExperimentConfig& c) -> int& { return c.eval_episodes; });
    add("experiment.eval_seed", [](const ExperimentConfig& c) { return std::to_string(c.eval_seed); },
        [](ExperimentConfig& c, const std::string& v) {
          c.eval_seed = ToUnsigned("experiment.eval_seed", v);
        });

    add_int("env.height", [](ExperimentConfig& c) -> int& { return c.maze.height; });
    add_int("env.width", [](ExperimentConfig& c) -> int& { return c.maze.width; });
    add_int("env.rooms", [](ExperimentConfig& c) -> int& { return c.maze.rooms; });
    add_int("env.episode_length",
            [](ExperimentConfig& c) -> int& { return c.maze.env.episode_length; });
    add("env.variant",
        [](const ExperimentConfig& c) {
          return std::string(c.maze.env.stochastic_reward ? "stochastic" : "deterministic");
        },
        [](ExperimentConfig& c, const std::string& v) {
          if (v == "deterministic") {
            c.maze.env.stochastic_reward = false;
          } else if (v == "stochastic") {
            c.maze.env.stochastic_reward = true;
          } else {
            throw ConfigError("invalid value for env.variant: '" + v + "'");
          }
        });

    add_dims("student.hidden", [](ExperimentConfig& c) -> std::vector<int>& { return c.student.hidden; });
    add_double("student.learning_rate",
               [](ExperimentConfig& c) -> double& { return c.student.policy_learning_rate; });
    add_double("student.value_learning_rate",
               [](ExperimentConfig& c) -> double& { return c.student.value_learning_rate; });
    add_double("student.clone_learning_rate",
               [](ExperimentConfig& c) -> double& { return c.student.clone_learning_rate; });
    add_double("student.value_scale", [](ExperimentConfig& c) -> double& { return c.student.value_scale; });
    add_double("student.gamma", [](ExperimentConfig& c) -> double& { return c.student.gae.gamma; });
    add_double("student.lambda", [](ExperimentConfig& c) -> double& { return c.student.gae.lambda; });
    add_double("student.clip_epsilon",
               [](ExperimentConfig& c) -> double& { return c.student.ppo.clip_epsilon; });
    add_double("student.entropy_coef",
               [](ExperimentConfig& c) -> double& { return c.student.ppo.entropy_coef; });
    add_double("student.value_coef", [](ExperimentConfig& c) -> double& { return c.student.ppo.value_coef; });
    add_int("student.epochs", [](ExperimentConfig& c) -> int& { return c.student.ppo.epochs; });
    add_int("student.minibatch_episodes",
            [](ExperimentConfig& c) -> int& { return c.student.ppo.minibatch_episodes; });
    add_bool("student.normalize_advantages",
             [](ExperimentConfig& c) -> bool& { return c.student.ppo.normalize_advantages; });

    add("teacher.reward",
        [](const ExperimentConfig& c) { return std::string(teacher::RewardKindName(c.reward)); },
        [](ExperimentConfig& c, const std::string& v) {
          const auto kind = teacher::ParseRewardKind(v);
          if (!kind) throw ConfigError("invalid value for teacher.reward: '" + v + "'");
          c.reward = *kind;
        });
    add_dims("teacher.hidden", [](ExperimentConfig& c) -> std::vector<int>& { return c.teacher.hidden; });
    add_dims("teacher.value_hidden",
             [](ExperimentConfig& c) -> std::vector<int>& { return c.teacher.value_hidden; });
    add_double("teacher.learning_rate",
               [](ExperimentConfig& c) -> double& { return c.teacher.learning_rate; });
    add_double("teacher.value_learning_rate",
               [](ExperimentConfig& c) -> double& { return c.teacher.value_learning_rate; });
    add_double("teacher.clip_epsilon",
               [](ExperimentConfig& c) -> double& { return c.teacher.ppo.clip_epsilon; });
    add_double("teacher.entropy_coef",
               [](ExperimentConfig& c) -> double& { return c.teacher.ppo.entropy_coef; });
    add_int("teacher.epochs", [](ExperimentConfig& c) -> int& { return c.teacher.ppo.epochs; });
    add_int("teacher.minibatch_episodes",
            [](ExperimentConfig& c) -> int& { return c.teacher.ppo.minibatch_episodes; });
    add_bool("teacher.normalize_advantages",
             [](ExperimentConfig& c) -> bool& { return c.teacher.ppo.normalize_advantages; });
    add_bool("teacher.normalize_rewards",
             [](ExperimentConfig& c) -> bool& { return c.teacher.normalize_rewards; });
    return f;
  }();
  return fields;
}

}  // namespace

void ApplyEnvPreset(ExperimentConfig& config, const std::string& name) {
  if (name == "desk") {
    config.maze.height = 12;
    config.maze.width = 12;
    config.maze.rooms = 6;
    config.maze.env.episode_length = 64;
  } else if (name == "paper") {
    config.maze.height = 30;
    config.maze.width = 30;
    config.maze.rooms = 20;
    config.maze.env.episode_length = 160;
  } else if (name == "tiny") {
    config.maze.height = 6;
    config.maze.width = 6;
    config.maze.rooms = 2;
    config.maze.env.episode_length = 16;
    config.episodes_per_iteration = 4;
    config.eval_episodes = 4;
    config.student.hidden = {16, 16};
    config.teacher.hidden = {32};
    config.teacher.value_hidden = {16};
    config.student.ppo.minibatch_episodes = 2;
  } else {
    throw ConfigError("invalid value for env.preset: '" + name + "'");
  }
}

void ApplyStudentPreset(ExperimentConfig& config, const std::string& name) {
  if (name == "desk") {
    config.student.gae.gamma = 0.99;
    config.student.gae.lambda = 0.95;
    config.student.policy_learning_rate = 1e-3;
    config.student.value_learning_rate = 1e-3;
    config.student.clone_learning_rate = 1e-3;
    config.student.value_scale = 10.0;
    config.teacher.learning_rate = 1e-3;
    config.teacher.value_learning_rate = 1e-3;
    config.teacher.ppo.normalize_advantages = false;
    config.teacher.normalize_rewards = true;
  } else if (name == "paper") {
    config.student.gae.gamma = 0.998;
    config.student.gae.lambda = 0.95;
    config.student.policy_learning_rate = 3e-4;
    config.student.value_learning_rate = 3e-4;
    config.student.clone_learning_rate = 3e-4;
    config.student.ppo.clip_epsilon = 0.2;
    config.student.ppo.entropy_coef = 0.01;
    config.teacher.learning_rate = 3e-4;
    config.teacher.value_learning_rate = 3e-4;
    config.teacher.ppo.clip_epsilon = 0.2;
    config.teacher.ppo.entropy_coef = 0.01;
  } else {
    throw ConfigError("invalid value for student.preset: '" + name + "'");
  }
}

ExperimentConfig ParseConfig(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'section.key = value'");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.find('.') == std::string::npos) throw ConfigError("malformed config key: " + key);
    entries.emplace_back(key, value);
  }

  ExperimentConfig config;
  for (const auto& [key, value] : entries) {
    if (key == "env.preset") ApplyEnvPreset(config, value);
  }
  for (const auto& [key, value] : entries) {
    if (key == "student.preset") ApplyStudentPreset(config, value);
  }
  for (const auto& [key, value] : entries) {
    if (key == "env.preset" || key == "student.preset") continue;
    bool found = false;
    for (const Field& field : Fields()) {
      if (field.key == key) {
        field.set(config, value);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown config key: " + key);
  }
  Finalize(config);
  return config;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string FormatConfig(const ExperimentConfig& config) {
  std::string out;
  for (const Field& field : Fields()) {
    out += field.key + " = " + field.get(config) + "\n";
  }
  return out;
}

void Finalize(ExperimentConfig& config) {
  auto check = [](bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError(key + " " + what);
  };
  check(config.iterations >= 0, "experiment.iterations", "must be >= 0");
  check(config.episodes_per_iteration >= 1, "experiment.episodes_per_iteration", "must be >= 1");
  check(config.eval_every >= 0, "experiment.eval_every", "must be >= 0");
  check(config.eval_episodes >= 1, "experiment.eval_episodes", "must be >= 1");
  check(config.maze.height >= 1 && config.maze.width >= 1, "env.height/env.width", "must be >= 1");
  check(config.maze.rooms >= 1 && config.maze.height * config.maze.width >= 4 * config.maze.rooms,
        "env.rooms", "is infeasible for the grid size");
  check(config.maze.env.episode_length >= 1, "env.episode_length", "must be >= 1");
  check(config.student.gae.gamma > 0.0 && config.student.gae.gamma <= 1.0, "student.gamma",
        "must lie in (0, 1]");
  check(config.student.gae.lambda >= 0.0 && config.student.gae.lambda <= 1.0, "student.lambda",
        "must lie in [0, 1]");
  check(config.student.ppo.clip_epsilon > 0.0, "student.clip_epsilon", "must be positive");
  check(config.student.ppo.entropy_coef >= 0.0, "student.entropy_coef", "must be >= 0");
  check(config.student.ppo.epochs >= 0, "student.epochs", "must be >= 0");
  check(config.student.ppo.minibatch_episodes >= 0, "student.minibatch_episodes", "must be >= 0");
  check(config.student.policy_learning_rate > 0.0, "student.learning_rate", "must be positive");
  check(config.student.value_learning_rate > 0.0, "student.value_learning_rate",
        "must be positive");
  check(config.student.clone_learning_rate > 0.0, "student.clone_learning_rate",
        "must be positive");
  check(config.student.value_scale > 0.0, "student.value_scale", "must be positive");
  check(config.teacher.ppo.clip_epsilon > 0.0, "teacher.clip_epsilon", "must be positive");
  check(config.teacher.ppo.entropy_coef >= 0.0, "teacher.entropy_coef", "must be >= 0");
  check(config.teacher.ppo.epochs >= 0, "teacher.epochs", "must be >= 0");
  check(config.teacher.ppo.minibatch_episodes >= 0, "teacher.minibatch_episodes", "must be >= 0");
  check(config.teacher.learning_rate > 0.0, "teacher.learning_rate", "must be positive");
  check(config.teacher.value_learning_rate > 0.0, "teacher.value_learning_rate",
        "must be positive");
  config.student.observation_dim = maze::kObservationDim;
  config.student.num_actions = maze::kNumActions;
  config.teacher.height = config.maze.height;
  config.teacher.width = config.maze.width;
}

}  // namespace autodime::harness
