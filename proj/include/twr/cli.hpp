#pragma once

namespace twr {

// Entry point for the command line tool. Returns the process exit code:
// 0 success, 1 infeasible/verification failure, 2 usage or input errors.
int run_cli(int argc, char** argv);

}  // namespace twr
