#pragma once

#include <iosfwd>

namespace lzl::cli {

/// Runs the command line and returns the process exit code: 0 success,
/// 1 negative verification verdict, 2 usage/validation error, 3 cap exceeded.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lzl::cli
