#include <iostream>
#include <string>
#include <vector>

#include "ladderplan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ladder::run(args, std::cout, std::cerr);
}
