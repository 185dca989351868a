#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonblock {

// Runs the command-line tool in-process on `args` (everything after the
// program name), writing reports to `out` and diagnostics to `err`.
//
// Exit codes: 0 = nonblocking / prefix-closed, 1 = blocking / not closed,
// 2 = usage or input error, 3 = search budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nonblock
