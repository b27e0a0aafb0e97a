#pragma once

namespace hookpath {

// Entry point of the command-line tool (exposed for in-process testing).
// Exit codes: 0 all checks pass, 1 hard check failed, 2 usage error,
// 3 resource guard tripped (rerun with --force).
int cli_main(int argc, const char* const* argv);

}  // namespace hookpath
