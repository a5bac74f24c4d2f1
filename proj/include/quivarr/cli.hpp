#pragma once

#include <iosfwd>

namespace quivarr {

// Exit codes: 0 success, 2 unparseable input, 3 violated hypothesis, 4 internal inconsistency.
int run_cli(int argc, char** argv);

// Invariant suite over the built-in corpus; true when every check passes.
bool run_selftest(unsigned seed, std::ostream& log);

}  // namespace quivarr
