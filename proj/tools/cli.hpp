#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "legknot/error.hpp"

namespace legknot::cli {

/// 0 ok, 2 usage, 3 parse, 4 limit exceeded, 5 inconsistency, 1 anything else.
int exit_code(Errc code) noexcept;

/// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legknot::cli
