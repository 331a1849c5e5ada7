#include <iostream>
#include <string>
#include <vector>

#include "boxline/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return boxline::run(args, std::cout, std::cerr);
}
