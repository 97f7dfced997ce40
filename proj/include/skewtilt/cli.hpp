#pragma once

#include <ostream>

namespace skewtilt {

// Exit codes: 0 success, 1 domain violation, 2 parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace skewtilt
