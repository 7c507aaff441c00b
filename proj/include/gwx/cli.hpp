#pragma once

namespace gwx {

// Entry point behind the gwx binary. Exit codes: 0 success, 1 usage error,
// 2 runtime failure. Human-readable progress goes to stderr; one-line
// machine-readable summaries go to stdout.
int run_cli(int argc, const char* const* argv);

}  // namespace gwx
