#pragma once

#include <iosfwd>

namespace denstat {

// Entry point of the denstat tool. Exit codes: 0 = success / all checks
// pass, 1 = a verification failed (witness printed), 2 = usage or
// validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace denstat
