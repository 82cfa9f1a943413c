#pragma once

#include <iosfwd>

namespace bk {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitAudit = 2,
  kExitSolver = 3,
};

/// Entry point of the bkctl command line (validate, run, reproduce-paper).
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bk
