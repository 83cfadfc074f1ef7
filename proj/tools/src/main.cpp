#include <iostream>
#include <string>
#include <vector>

#include "e7/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return e7::cli::run(args, std::cout, std::cerr);
}
