#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkrays::cli {

// Runs the hkrays command line.  args excludes the program name.
// Exit status: 0 success, 1 domain error (bad e/d/congruence or bad
// arguments), 2 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace hkrays::cli
