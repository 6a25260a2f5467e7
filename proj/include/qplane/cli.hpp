#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qplane {

/*
 * Command-line entry point, separated from main() so tests can drive the
 * tool in-process. `args` excludes the program name. Returns the process
 * exit code: 0 on success, 1 when a check suite reports failures, 2 on
 * usage or expression-parse errors.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qplane
