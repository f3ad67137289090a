#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace starlab {

/// Runs one `starlab` invocation. `args` excludes the program name.
/// Returns 0 when every check passed or was skipped, 1 on any failed check,
/// 2 on invalid input (with a single "error: <category>: <message>" line on
/// `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlab
