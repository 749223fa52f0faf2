#include <iostream>
#include <string>
#include <vector>

#include "turan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return turan::run_cli(args, std::cout, std::cerr);
}
