#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs one subcommand (gen, norm, sum, ratio, construct, search, ksz-scaling,
// verify). `args` excludes the program name. Results go to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace bhlab::cli
