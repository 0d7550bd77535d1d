#pragma once

#include <iosfwd>

namespace ternhom::cli {

// Exit codes: 0 success, 1 usage or parse error, 2 mathematical contract
// failure (axioms, parity, cycle checks), 3 resource limit.
enum ExitCode : int { Ok = 0, Usage = 1, Contract = 2, Resource = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ternhom::cli
