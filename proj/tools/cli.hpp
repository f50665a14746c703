#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphpoly::cli {

// Full CLI entry point, stream-parameterized so tests can drive it in
// process.  args excludes the program name.  Returns the process exit code:
// 0 ok, 1 verification failure, 2 usage or parse error, 3 capacity or
// arithmetic error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace graphpoly::cli
