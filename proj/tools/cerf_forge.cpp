#include <iostream>
#include <string>
#include <vector>

#include "cerf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cerf::run_command(args, std::cout, std::cerr);
}
