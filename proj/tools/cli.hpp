#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bigrr::cli {

/// Exit statuses of `run`.
enum Exit : int { kOk = 0, kUsage = 1, kCap = 2, kDisagreement = 3 };

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigrr::cli
