// Command-line front end.  Exposed as a library entry point so the whole
// surface is testable in-process; tools/klc_main.cpp is a thin wrapper.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klc::cli {

// Runs one command; argv excludes the program name.  Returns 0 on
// success, 1 on validation/usage errors, 2 when an identity check fails.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace klc::cli
