#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topo::cli {

/// Runs one command-line invocation against the given streams and returns
/// the process exit code: 0 on success, 1 when verify found a violation or
/// mine found a witness, 2 on any input or usage error. Report documents go
/// to out; diagnostics, timings and errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace topo::cli
