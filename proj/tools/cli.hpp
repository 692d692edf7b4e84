#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syncprim::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line `args` (program name first). Documents go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syncprim::cli
