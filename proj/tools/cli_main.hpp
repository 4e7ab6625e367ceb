#pragma once

#include <ostream>

namespace taufan {

// the whole command surface, callable in process for tests; returns the
// process exit code (0 ok, 1 input error, 2 cap exceeded, 3 failed check)
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace taufan
