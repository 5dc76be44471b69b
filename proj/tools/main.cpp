#include <iostream>
#include <string>
#include <vector>

#include "umlxml/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return static_cast<int>(umlxml::cli::run(args, std::cout, std::cerr));
}
