#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detcert {

// Runs the command-line tool on the given arguments (program name excluded).
//
// Exit codes:
//   0  success; for analyze, the necessary condition holds
//   2  analyze: the input matrix is singular
//   3  analyze: verdict NotMaximal
//   64 usage errors (bad flags, unknown formats, order beyond budget)
//   65 malformed matrix data
//   74 file I/O failures
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detcert
