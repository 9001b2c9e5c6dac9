#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eiscong {

// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 input/parse error, 3 precision or budget error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace eiscong
