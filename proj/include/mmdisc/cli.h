#ifndef MMDISC_CLI_H
#define MMDISC_CLI_H

#include <ostream>

namespace mmdisc {

enum ExitCode : int
{
  kExitOk = 0,
  kExitConfigError = 1,
  kExitRuntimeError = 2,
};

/**
 * Entry point of the mmdisc command line tool.
 *
 *   mmdisc run --config FILE [--seed N] [--out DIR] [--parallelism P]
 *   mmdisc reproduce {fig3|fig5a|fig5b|fig5c|fig5d} [--out DIR] [--seed N] [--parallelism P] [--users N]
 */
int RunCli (int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mmdisc

#endif
