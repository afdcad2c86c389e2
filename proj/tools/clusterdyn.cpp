#include <iostream>
#include <string>
#include <vector>

#include "clusterdyn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clusterdyn::cli_main(args, std::cout, std::cerr);
}
