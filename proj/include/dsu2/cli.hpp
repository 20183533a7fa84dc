#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsu2::cli {

/// Runs the command line (args excludes the program name). JSON goes to
/// `out` unless --output names a file; help text goes to `out` as well.
/// Returns 0 on success, 1 when verification checks fail, 2 on usage or
/// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace dsu2::cli
