#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hspec::cli {

/// Command-line entry point, separated from main() so tests can drive it.
/// Results go to `out`, diagnostics to `err`. Exit status: 0 success,
/// 1 input error, 2 non-convergence, 3 internal assertion (a proved bound
/// came back violated).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hspec::cli
