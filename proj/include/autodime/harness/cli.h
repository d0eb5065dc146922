#ifndef AUTODIME_HARNESS_CLI_H_
#define AUTODIME_HARNESS_CLI_H_

#include <iosfwd>

namespace autodime::harness {

// Command-line entry point:
//
//   train   --config F [--seed N] [--out DIR]
//   eval    --checkpoint F --episodes N [--replay-out F]
//   sweep   --configs DIR [--out DIR]
//   inspect --replay F
//
// `train` writes DIR/config.txt, DIR/log.csv and DIR/checkpoint.txt.
// Returns the process exit code: 0 on success, 1 on runtime failure, 2 on
// usage or configuration errors.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace autodime::harness

#endif  // AUTODIME_HARNESS_CLI_H_
