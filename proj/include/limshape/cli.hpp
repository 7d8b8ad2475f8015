#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace limshape {

// args excludes the program name. Returns 0 ok, 1 invalid input, 2 computation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limshape
