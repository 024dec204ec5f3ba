#include <iostream>

#include "jumpkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jumpkit::run_cli(args, std::cerr);
}
