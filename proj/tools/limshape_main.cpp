#include "limshape/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return limshape::run_cli(args, std::cout, std::cerr);
}
