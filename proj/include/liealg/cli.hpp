#pragma once

#include <ostream>

namespace liealg::cli {

/// Runs one command line. Returns 0 on success, 1 on a verification failure
/// or counterexample, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liealg::cli
