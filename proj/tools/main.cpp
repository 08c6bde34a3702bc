#include <iostream>
#include <string>
#include <vector>

#include "qspin/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return qspin::run_cli(args, std::cout, std::cerr);
}
