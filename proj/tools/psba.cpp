#include <iostream>
#include <string>
#include <vector>

#include "psba/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return psba::run_cli(args, std::cout, std::cerr);
}
