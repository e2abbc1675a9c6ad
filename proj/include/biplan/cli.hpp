#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biplan {

/// Runs one `biplan` subcommand. Exit codes: 0 success, 2 a well-formed
/// negative answer (infeasible, violations, oracle mismatch), 1 error with a
/// JSON error object written to err.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biplan
