#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thuelab {

// Exit codes: 0 clean or success, 1 witness found or infeasible, 2 usage,
// input error or exhausted budget.
int cli_main(int argc, char** argv);
// Same as cli_main with args excluding the program name.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thuelab
