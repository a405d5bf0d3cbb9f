#pragma once

#include <ostream>

namespace minkowski {

/// Entry point of the `minkowski` command line tool. Exit codes: 0 when every
/// requested check passes, 1 when a check fails, 2 for unusable input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minkowski
