#include <iostream>
#include <vector>

#include "srgdist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return srg::cmd_dispatch(args, std::cout, std::cerr);
}
