#include <iostream>
#include <string>
#include <vector>

#include "lucanomial/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lucanomial::cli::run_cli(args, std::cout);
}
