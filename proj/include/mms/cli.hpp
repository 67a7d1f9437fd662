#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mms::cli {

enum ExitCode : int {
    kSuccess = 0,  // success, or the property holds
    kNegative = 1, // the property fails, or the requested object does not exist
    kUsage = 2,    // bad arguments or invalid input
    kCapacity = 3, // a work budget was exceeded
};

/// Runs one command line (without the program name). FILE arguments equal to
/// "-" read from `in`. Payloads go to `out` unless --out names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mms::cli
