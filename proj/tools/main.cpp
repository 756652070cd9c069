#include <iostream>
#include <string>
#include <vector>

#include "cliffga/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cliffga::run_cli(std::move(args), std::cout, std::cerr);
}
