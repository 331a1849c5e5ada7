#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxline {

// Runs the command-line tool.  `args` excludes the program name.  Returns
// the process exit code: 0 solved/clean, 1 empty result or outliers found,
// 2 input or usage error, 3 indeterminate seed or discard budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxline
