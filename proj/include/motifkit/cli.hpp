#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motifkit::cli {

enum ExitCode : int
{
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
};

/// Runs one subcommand.  args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

/// Quick version of every module's invariant suite; writes one line per
/// check and stops at the first failure.
int selftest(std::ostream &out);

} // namespace motifkit::cli
