#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su2free {

// Exit codes: 0 ok/free, 2 parse error, 3 non-free verdict, 4 budget
// exceeded, 5 verification mismatches beyond the expected list, 1 other
// failures.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su2free
