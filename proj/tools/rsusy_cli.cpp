#include "rsusy/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rsusy::run_cli(argc, argv, std::cout, std::cerr); }
