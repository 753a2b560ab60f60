#pragma once

#include <iosfwd>

namespace qgt {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qgt
