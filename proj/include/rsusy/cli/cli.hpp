#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace rsusy {

struct RunConfig {
    std::string command;
    std::map<std::string, std::string> params;  // rationals as "p/q"
    int degree = 0;
    std::vector<int> grids;
    std::string output;          // empty: stdout
    std::string format = "text";  // text | json | csv
};

// exit codes: 0 success, 1 verification failure, 2 usage error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsusy
