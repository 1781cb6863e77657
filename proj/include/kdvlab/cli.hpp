#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdvlab::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat key=value config file into "--key value" arguments. Blank
/// lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

}  // namespace kdvlab::cli
