#ifndef AUTODIME_HARNESS_CSV_LOG_H_
#define AUTODIME_HARNESS_CSV_LOG_H_

#include <iosfwd>
#include <string>

#include "autodime/harness/experiment.h"

namespace autodime::harness {

// Log schema version 1. The file starts with `# autodime log schema 1`, then
// a header row, then one row per iteration in this column order:
//
//   iteration, p_easy, p_hard, p_impossible, teacher_reward, mean_return,
//   policy_loss, value_loss, entropy, clone_kl, teacher_policy_loss,
//   teacher_value_loss, teacher_entropy, hard_eval_return
//
// hard_eval_return is empty on iterations without evaluation. Numbers use
// %.17g so identical runs give identical bytes.
inline constexpr int kCsvSchemaVersion = 1;

std::string CsvHeader();
std::string CsvRow(const IterationRecord& record);
void WriteCsv(std::ostream& out, const ExperimentLog& log);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_CSV_LOG_H_
