#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra::cli {

/// Runs one command line (program name excluded) against the given streams.
/// Returns the process exit code: 0 on success or all checks passing, 1 when
/// a verification or search reports failure, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main() adapter over the real process streams.
int run(int argc, const char* const* argv);

}  // namespace spectra::cli
