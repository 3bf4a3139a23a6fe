#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmat {

// Process exit codes of the `bmat` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitClassification = 2,  // input is not a B-matrix
  kExitSoundness = 3,       // a bound fell below a sampled norm, or a reproduction mismatch
  kExitParse = 64,          // unreadable input or bad command line
  kExitDimension = 65,      // dimension mismatch or out-of-range size
};

// Runs `bmat` with args[0] as the program name. All output goes to the given
// streams; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmat
