#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsq::cli {

// Exit codes: 0 success, 1 axiom or validation failure (report printed),
// 2 parse/IO error, 3 bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsq::cli
