#include <iostream>
#include <string>
#include <vector>

#include "symgen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symgen::run(args, std::cout, std::cerr);
}
