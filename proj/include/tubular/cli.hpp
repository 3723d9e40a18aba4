#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tubular {

// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input
// error, 3 resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tubular
