#ifndef AUTODIME_HARNESS_EVALUATION_H_
#define AUTODIME_HARNESS_EVALUATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "autodime/harness/config.h"
#include "autodime/harness/rollout.h"
#include "autodime/student/student.h"

namespace autodime::harness {

struct DifficultyFrequencies {
  double easy = 0.0;
  double hard = 0.0;
  double impossible = 0.0;
};

// Empirical difficulty frequencies over a non-empty window of episodes.
DifficultyFrequencies SamplingProbabilities(std::span<const Episode> window);

// Monte-Carlo difficulty proportions of uniformly spawned episodes.
DifficultyFrequencies UniformSpawnProportions(std::uint64_t seed, int samples,
                                              const MazeSettings& settings);

// Draws layout + uniform spawn pairs from a stream seeded by `seed` and keeps
// the Hard ones until `count` are found. Throws ContractViolation once
// `max_draws` pairs have been rejected.
std::vector<Episode> SampleHardEpisodes(std::uint64_t seed, int count,
                                        const MazeSettings& settings,
                                        std::int64_t max_draws = 1'000'000);

// Mean greedy-policy return of the student on Hard episodes, with the
// expected (deterministic) reward. Leaves the student untouched.
double EvaluateHard(const student::Student& student, std::uint64_t seed, int count,
                    const MazeSettings& settings);
double EvaluateOnEpisodes(const student::Student& student, const std::vector<Episode>& episodes,
                          const MazeSettings& settings);

// Same evaluation with the shortest-path controller in place of the student.
double EvaluateHardScripted(std::uint64_t seed, int count, const MazeSettings& settings);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_EVALUATION_H_
