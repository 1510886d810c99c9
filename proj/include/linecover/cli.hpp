#pragma once

namespace linecover::cli {

// Command-line entry point. Exit codes: 0 success, 1 usage or input error,
// 2 solver stopped at a limit without a proven optimum (the incumbent is
// still reported and written).
int run(int argc, const char* const* argv);

}  // namespace linecover::cli
