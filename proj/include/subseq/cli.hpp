#pragma once

#include <iosfwd>

namespace subseq {

/// Exit codes: 0 when a command ran (whatever the verdict), 2 for input
/// errors, 3 when a resource limit was hit, 1 for internal failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subseq
