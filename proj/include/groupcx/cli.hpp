#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupcx {

/// The command-line toolkit, callable in-process. args excludes the program
/// name. Exit codes: 0 success, 1 failed verification, 2 usage error,
/// 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace groupcx
