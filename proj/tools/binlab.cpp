#include <iostream>
#include <string>
#include <vector>

#include "binlab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return binlab::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return binlab::cli::kExitFailure;
    }
}
