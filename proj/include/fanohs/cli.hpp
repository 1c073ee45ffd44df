#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanohs::cli {

// Runs one command line (without argv[0]).  Exit code 0 on success, 1 on
// usage/domain/validation errors, 2 on internal-consistency failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fanohs::cli
