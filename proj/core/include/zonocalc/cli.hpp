#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zonocalc {

/// Command-line frontend. Exit codes: 0 holds/equality (or plain success),
/// 2 violated, 3 inconclusive, 64 malformed input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zonocalc
