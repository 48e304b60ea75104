#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eilab {

/// Exit codes: 0 success (all checks passed), 1 a violation, skip or
/// per-graph failure, 2 usage or input error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eilab
