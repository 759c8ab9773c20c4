#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gog::cli {

// Exit codes: 0 success/positive verdict, 1 negative verdict, 2 usage
// error, 3 Unknown/Inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gog::cli
