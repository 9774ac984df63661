#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spincount/function.hpp"

namespace spincount {

/// Inline function literal: either the values alone (count a power of two, arity
/// inferred) or `<arity> <values>`.
PBFunction parse_function_literal(const std::string& text);

/// Runs the command line (args exclude the program name). Returns the exit code:
/// 0 success, 1 internal verification failure, 2 input error, 3 capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spincount
