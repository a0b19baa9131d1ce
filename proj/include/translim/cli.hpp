// Command-line front end: every library operation behind a subcommand,
// plus the demonstration tables and the law/oracle suites.
//
// Exit codes: 0 success, 1 validation failure or any failed check,
// 2 command-line or expression syntax error.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace translim::cli {

/// argv-style entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace translim::cli
