#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittkit {

/*
 * Runs one `wittkit` invocation. `args` excludes the program name.
 * Returns the process exit status: 0 success, 1 failed verification,
 * 2 bad input (with a one-line diagnostic on `err`).
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittkit
