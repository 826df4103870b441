#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbp {

// Runs one CLI invocation. JSON goes to out, diagnostics to err.
// Exit codes: 0 success (and: property holds / all verify assertions pass),
// 1 property violated or verify failure, 2 usage or parse errors,
// 3 size caps, overflow, or convergence failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbp
