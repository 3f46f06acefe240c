#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bots::cli {

/// Runs the `bots` command line. Returns the process exit code; normal
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bots::cli
