#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "frob/errors.hpp"

namespace frob {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Exit codes: 0 success, 1 parse/IO/usage, 2 hypothesis, 3 budget, 4 internal.
int exit_code_for(const Error& error);

/// Runs the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace frob
