#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeid {

// Exit status: 0 success, 1 error (structured JSON on err), 2 finding.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeid
