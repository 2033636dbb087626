#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensurg {

/// Exit statuses: 0 when every verdict passes, 1 when one fails, 2 on a
/// usage or input error.
enum ExitStatus { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Reorders arguments so that options may follow the `--` sentinel:
/// `lattice embed -- -2,-3 --json` becomes `lattice embed --json -- -2,-3`.
/// Options that take a value are glued to it (`--eps=-1,0,1`), so negative
/// values are never mistaken for flags.
std::vector<std::string> normalize_arguments(const std::vector<std::string>& args);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensurg
