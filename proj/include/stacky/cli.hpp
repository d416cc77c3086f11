#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stacky {

/// The stacky-pic command line, callable in-process. `args` excludes the
/// program name. Exit codes: 0 success, 1 input error, 2 verification
/// failure, 3 enumeration bound exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace stacky
