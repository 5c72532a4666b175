#pragma once

#include <string>
#include <vector>

namespace qforms {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

/// Parses and runs a full command line (argv[1..]).  Never throws: errors
/// are reported as {"error": ...} JSON with exit code 3.
///
/// Exit codes: 0 solvable / true / success, 1 unsolvable / false,
/// 2 unknown within the bound, 3 input error.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace qforms
