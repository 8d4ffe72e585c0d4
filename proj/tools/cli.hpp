#pragma once

#include <ostream>
#include <vector>
#include <string>

namespace permpoly {

/// Command-line front end.  Exit codes: 0 success, 1 usage error,
/// 2 invalid permutation/basis syntax, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace permpoly
