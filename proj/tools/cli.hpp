#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterkit::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification check found a counterexample and 2 on bad input or
/// an internal error, with a one-line diagnostic on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterkit::cli
