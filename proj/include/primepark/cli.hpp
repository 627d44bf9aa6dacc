#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primepark {

/// Exit codes: 0 success or property holds, 1 property false, 2 usage or
/// input error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primepark
