#pragma once

#include <ostream>

namespace weingarten::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBadInput = 2,
    kSingular = 3,
};

/// Runs one command line. Reports go to `out` unless an output path is
/// given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weingarten::cli
