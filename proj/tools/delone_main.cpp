#include <iostream>
#include <vector>

#include "delone/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return delone::run_cli(args, std::cout, std::cerr);
}
