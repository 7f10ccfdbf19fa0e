#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilgr {

// args excludes the program name. Returns 0 on success, 1 on verification failure, 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nilgr
