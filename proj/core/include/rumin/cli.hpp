#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rumin/report.hpp"

namespace rumin {

/// Runs one CLI invocation. Exit codes: 0 all checks pass, 1 at least one
/// check failed (witnesses are in the report), 2 parse/usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rumin
