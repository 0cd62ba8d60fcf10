#include <iostream>
#include <string>
#include <vector>

#include "girthspan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return girthspan::cli::run(args, std::cout, std::cerr);
}
