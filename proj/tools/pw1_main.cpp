#include <iostream>
#include <string>
#include <vector>

#include "pw1/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pw1::cli::run(args, std::cin, std::cout, std::cerr);
}
