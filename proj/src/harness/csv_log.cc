#include "autodime/harness/csv_log.h"

#include <cstdio>
#include <ostream>

namespace autodime::harness {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string CsvHeader() {
  return "# autodime log schema " + std::to_string(kCsvSchemaVersion) +
         "\niteration,p_easy,p_hard,p_impossible,teacher_reward,mean_return,policy_loss,"
         "value_loss,entropy,clone_kl,teacher_policy_loss,teacher_value_loss,"
         "teacher_entropy,hard_eval_return\n";
}

std::string CsvRow(const IterationRecord& r) {
  std::string row = std::to_string(r.iteration);
  for (double v : {r.sampling.easy, r.sampling.hard, r.sampling.impossible, r.teacher_reward,
                   r.mean_return, r.student.policy_loss, r.student.value_loss, r.student.entropy,
                   r.student.clone_kl, r.teacher.policy_loss, r.teacher.value_loss,
                   r.teacher.entropy}) {
    row += ',' + Num(v);
  }
  row += ',';
  if (r.hard_eval_return) row += Num(*r.hard_eval_return);
  return row + '\n';
}

void WriteCsv(std::ostream& out, const ExperimentLog& log) {
  out << CsvHeader();
  for (const auto& row : log.rows) out << CsvRow(row);
}

}  // namespace autodime::harness
